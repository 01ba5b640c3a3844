//! Sample one G(n, m, p), project it and report a few graph statistics.
//!
//!     cargo run --example generate_graph -- 200 150 0.02 7

use rig_lab::model::{
    degree, is_connected, project, sample_assignment, write_edge_list, EdgeListHeader, ModelParams,
};

fn main() -> rig_lab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let n: usize = arg(0, "200").parse().expect("n");
    let m: usize = arg(1, "150").parse().expect("m");
    let p: f64 = arg(2, "0.02").parse().expect("p");
    let seed: u64 = arg(3, "7").parse().expect("seed");

    let params = ModelParams::new(n, m, p)?;
    let assignment = sample_assignment(&params, seed);
    let graph = project(&assignment);

    let attachments: usize = assignment.sets().iter().map(Vec::len).sum();
    let degrees = (0..n)
        .map(|v| degree(&graph, v))
        .collect::<rig_lab::Result<Vec<_>>>()?;
    let isolated = degrees.iter().filter(|&&d| d == 0).count();

    println!("G({n}, {m}, {p}) seed {seed}");
    println!(
        "  attachments      {attachments} (expected {:.1})",
        (n * m) as f64 * p
    );
    println!("  edges            {}", graph.edge_count());
    println!("  max degree       {}", degrees.iter().max().unwrap_or(&0));
    println!("  isolated         {isolated}");
    println!("  connected        {}", is_connected(&graph));

    let text = write_edge_list(&graph, &EdgeListHeader { params, seed });
    println!("\nfirst lines of the edge list:");
    for line in text.lines().take(6) {
        println!("  {line}");
    }
    Ok(())
}
