//! Benchmark harness. Each measurement runs in a fresh child process so
//! peak-memory readings are not polluted by earlier sweep points; the
//! parent emits one CSV row per (point, repeat) in order.

use jisolve_core::{build_live_index, gen_cisl, max_length, solve_dp_q_value, GenParams};
use std::io::Write;
use std::time::Instant;

pub const CSV_VERSION: &str = "# jisolve-bench v1";
pub const CSV_HEADER: &str = "algo,n,gamma,c,Q,ell,time_ms,peak_mem_bytes,value";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepAxis {
    Gamma,
    N,
    C,
}

pub struct BenchArgs {
    pub sweep: SweepAxis,
    pub points: Vec<u64>,
    pub n: usize,
    pub c: u32,
    pub gamma: u32,
    pub repeats: u32,
    pub seed: u64,
}

/// Runs one measurement in-process and prints its CSV row.
pub fn run_point(n: usize, c: u32, gamma: u32, seed: u64) -> Result<(), String> {
    let g = gen_cisl(&GenParams::new(n, c, gamma, seed)).map_err(|e| e.to_string())?;
    let (q, ell) = if g.is_empty() {
        (0, 0)
    } else {
        (build_live_index(&g).q(), max_length(g.rep()).unwrap())
    };
    let start = Instant::now();
    let value = solve_dp_q_value(&g).map_err(|e| e.to_string())?;
    let time_ms = start.elapsed().as_secs_f64() * 1e3;
    let peak = peak_rss_bytes().unwrap_or(0);
    println!(
        "dpq,{},{},{},{},{},{:.3},{},{}",
        g.n(),
        g.gamma(),
        g.c(),
        q,
        ell,
        time_ms,
        peak,
        value
    );
    Ok(())
}

/// Spawns a child per measurement and forwards the rows in sweep order.
pub fn run_sweep(args: &BenchArgs) -> Result<(), String> {
    let exe = std::env::current_exe().map_err(|e| e.to_string())?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "{CSV_VERSION}").ok();
    writeln!(out, "{CSV_HEADER}").ok();
    for (pi, &point) in args.points.iter().enumerate() {
        let (n, c, gamma) = match args.sweep {
            SweepAxis::Gamma => (args.n, args.c, point as u32),
            SweepAxis::N => (point as usize, args.c, args.gamma),
            SweepAxis::C => (args.n, point as u32, args.gamma),
        };
        for rep in 0..args.repeats {
            let row_seed = args
                .seed
                .wrapping_add(((pi as u64) * args.repeats as u64 + rep as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let output = std::process::Command::new(&exe)
                .args([
                    "bench-point",
                    "--n",
                    &n.to_string(),
                    "--c",
                    &c.to_string(),
                    "--gamma",
                    &gamma.to_string(),
                    "--seed",
                    &row_seed.to_string(),
                ])
                .output()
                .map_err(|e| format!("failed to spawn measurement child: {e}"))?;
            if !output.status.success() {
                return Err(format!(
                    "measurement child failed: {}",
                    String::from_utf8_lossy(&output.stderr).trim()
                ));
            }
            out.write_all(&output.stdout).ok();
        }
    }
    Ok(())
}

/// Peak resident set size of this process in bytes, from getrusage with
/// the /proc high-water mark as fallback.
pub fn peak_rss_bytes() -> Option<u64> {
    unsafe {
        let mut usage: libc::rusage = std::mem::zeroed();
        if libc::getrusage(libc::RUSAGE_SELF, &mut usage) == 0 && usage.ru_maxrss > 0 {
            // ru_maxrss is in kilobytes on Linux
            return Some(usage.ru_maxrss as u64 * 1024);
        }
    }
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    for line in status.lines() {
        if let Some(rest) = line.strip_prefix("VmHWM:") {
            let kb: u64 = rest.trim().trim_end_matches("kB").trim().parse().ok()?;
            return Some(kb * 1024);
        }
    }
    None
}
