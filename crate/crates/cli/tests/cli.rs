use std::io::Write;
use std::process::{Command, Output};

use qden_cli::report::Value;
use qden_cli::ReportEnvelope;

fn qden(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qden"))
        .args(args)
        .env_remove("QDEN_NODES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> ReportEnvelope {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let env = ReportEnvelope::from_json(&stdout(&qden(&full))).unwrap();
    assert!(env.unitless_numeric().is_empty(), "{:?}", env.unitless_numeric());
    env
}

fn float(env: &ReportEnvelope, name: &str, col: usize) -> f64 {
    match &env.results.get(name).unwrap_or_else(|| panic!("no {name}")).values[col] {
        Value::Float(x) => *x,
        Value::Int(i) => *i as f64,
        other => panic!("{name} is {other:?}"),
    }
}

fn custom_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

const EXTRA_NODES: &str = "name,delta_g_nm,delta_ic_nm,w_si_nm,l_bu_nm,l_hdd_nm\n\
                           20nm,50,88,50,176,88\n\
                           x,30,64,30,10,64\n";

#[test]
fn nodes_list_csv_is_node_file_format() {
    let csv = stdout(&qden(&["nodes", "list", "--format", "csv"]));
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], "name,delta_g_nm,delta_ic_nm,w_si_nm,l_bu_nm,l_hdd_nm");
    assert_eq!(lines[1], "65nm,140,220,140,440,220");
    assert_eq!(lines[7], "7nm,26,50,26,100,50");
}

#[test]
fn nodes_list_merges_custom_file() {
    let f = custom_file(EXTRA_NODES);
    let path = f.path().to_str().unwrap();
    let env = json(&["nodes", "list", "--custom", path]);
    assert_eq!(env.results.series.len(), 9);
    assert_eq!(env.results.series[7], "20nm");
    assert!(env.warnings.iter().any(|w| w.contains("straggling")));
    assert_eq!(env.inputs["custom"], path);
}

#[test]
fn custom_nodes_from_environment() {
    let f = custom_file(EXTRA_NODES);
    let out = Command::new(env!("CARGO_BIN_EXE_qden"))
        .args(["layout", "--node", "20nm", "--format", "json"])
        .env("QDEN_NODES", f.path())
        .output()
        .unwrap();
    let env = ReportEnvelope::from_json(&stdout(&out)).unwrap();
    assert_eq!(env.results.series, ["20nm"]);
}

#[test]
fn unreadable_custom_file_is_input_error() {
    let out = qden(&["nodes", "list", "--custom", "/nonexistent/nodes.csv"]);
    assert_eq!(out.status.code(), Some(2));
    let f = custom_file("name,delta_g_nm,delta_ic_nm,w_si_nm,l_bu_nm,l_hdd_nm\nbad,0,1,1,1,1\n");
    let out = qden(&["nodes", "list", "--custom", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("must be positive"), "{err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn layout_single_node() {
    let env = json(&["layout", "--node", "7nm"]);
    assert!((float(&env, "delta_qi", 0) - 3.971).abs() < 1e-3);
    assert_eq!(env.results.get("delta_qi").unwrap().unit, "Mqb/cm2");
    assert_eq!(float(&env, "y_QB", 0), 12808.0);
}

#[test]
fn layout_all_reproduces_table() {
    let csv = stdout(&qden(&["layout", "--node", "all", "--format", "csv"]));
    let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], ["quantity", "unit", "65nm", "45nm", "32nm", "22nm", "14nm", "10nm", "7nm"]);
    assert_eq!(rows.len(), 15);
    let x_qb = rows.iter().find(|r| r[0] == "x_QB").unwrap();
    assert_eq!(&x_qb[2..], ["83580", "60100", "36300", "31252", "24040", "18270", "15730"]);
}

#[test]
fn layout_unknown_node() {
    let out = qden(&["layout", "--node", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
}

#[test]
fn shor_single_row() {
    let env = json(&["shor", "--bits", "1024", "--node", "10nm"]);
    assert!((float(&env, "area_10nm", 0) - 11.9).abs() < 0.05);
    assert!((float(&env, "runtime", 0) - 3.58).abs() < 0.005);
    assert_eq!(float(&env, "distance", 0), 30.0);
}

#[test]
fn shor_full_table_shape() {
    let csv = stdout(&qden(&["shor", "--format", "csv"]));
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "n_bits,data_qubits,distance,n_physical,area_14nm_mm2,area_10nm_mm2,area_7nm_mm2,runtime_h"
    );
    assert_eq!(lines.len(), 8);
}

#[test]
fn shor_untabulated_size() {
    let out = qden(&["shor", "--bits", "300", "--node", "7nm"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no physical-qubit model"));
    let env = json(&["shor", "--bits", "300", "--node", "10nm", "--d", "24", "--nphys", "500000000"]);
    assert!((float(&env, "area_10nm", 0) - 7.2).abs() < 1e-9);
    assert_eq!(float(&env, "data_qubits", 0), 600.0);
}

#[test]
fn window_example() {
    let env = json(&["window", "--node", "14nm", "--dest", "0.6", "--eta", "1e-3", "--t2", "1e-6"]);
    assert_eq!(env.results.get("feasible").unwrap().values[0], Value::Bool(true));
    let lo = float(&env, "f_low", 0);
    let hi = float(&env, "f_high", 0);
    assert!(lo >= 1.0 && hi <= 100.0 && lo < hi, "[{lo}, {hi}]");
    assert_eq!(
        env.results.get("binding_constraint_low").unwrap().values[0],
        Value::Text("node_gate_time".into())
    );
}

#[test]
fn window_infeasible_warns_but_succeeds() {
    let env = json(&["window", "--node", "65nm"]);
    assert_eq!(env.results.get("feasible").unwrap().values[0], Value::Bool(false));
    assert_eq!(env.results.get("f_low").unwrap().values[0], Value::Null);
    assert_eq!(env.warnings.len(), 1);
}

#[test]
fn window_custom_tunnel_model() {
    let env = json(&["window", "--node", "14nm", "--t0", "10", "--lambda", "8"]);
    assert_eq!(env.inputs["t0_mev"], "10.0");
    assert_eq!(env.inputs["lambda_nm"], "8.0");
    // 10 meV · exp(−40/8), below the ΔE_ST/2 clamp
    let expected = 10e3 * (-40.0f64 / 8.0).exp();
    assert_eq!(env.results.get("coupling_clamped").unwrap().values[0], Value::Bool(false));
    assert!((float(&env, "coupling", 0) - expected).abs() < 1e-9 * expected);
}

#[test]
fn window_sub_manufacturable_custom_node() {
    let f = custom_file("name,delta_g_nm,delta_ic_nm,w_si_nm,l_bu_nm,l_hdd_nm\n2nm,2,4,2,8,4\n");
    let out = qden(&["window", "--node", "2nm", "--custom", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn density_sweep_scales_with_pitch() {
    let csv = stdout(&qden(&[
        "density", "--code", "surface", "--d", "23", "--node", "7nm", "--sweep", "--format", "csv",
    ]));
    let mut rdr = csv::Reader::from_reader(csv.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    let g_col = headers.iter().position(|h| h == "delta_g_nm").unwrap();
    let d_col = headers.iter().position(|h| h == "density_Mqb_per_cm2").unwrap();
    let rows: Vec<(f64, f64)> = rdr
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[g_col].parse().unwrap(), r[d_col].parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 7);
    let k = rows[0].1 * rows[0].0 * rows[0].0;
    for (g, d) in rows {
        assert!((d * g * g - k).abs() < 1e-9 * k);
    }
}

#[test]
fn density_codes() {
    let steane = json(&["density", "--code", "steane", "--node", "7nm"]);
    let concat = json(&["density", "--code", "concat", "--node", "7nm"]);
    let ratio = float(&steane, "density", 0) / float(&concat, "density", 0);
    assert!((50.0..=200.0).contains(&ratio), "{ratio}");
    let quarter = json(&["density", "--code", "surface", "--d", "23", "--node", "7nm"]);
    let full = json(&[
        "density", "--code", "surface", "--d", "23", "--node", "7nm", "--convention", "full",
    ]);
    assert!((float(&quarter, "density", 0) / float(&full, "density", 0) - 4.0).abs() < 1e-12);
    assert_eq!(qden(&["density", "--code", "surface", "--node", "7nm"]).status.code(), Some(2));
    assert_eq!(qden(&["density", "--code", "surface", "--d", "1", "--node", "7nm"]).status.code(), Some(2));
    assert_eq!(qden(&["density", "--code", "steane", "--d", "5", "--node", "7nm"]).status.code(), Some(2));
}

#[test]
fn comm_commands() {
    let swap = json(&["comm", "swap", "--distance", "1000", "--node", "14nm"]);
    assert_eq!(float(&swap, "time", 0), 71.2e-9);
    assert_eq!(float(&swap, "hops", 0), 25.0);
    let shuttle = json(&["comm", "shuttle", "--distance", "1e-4", "--deltac", "0.3", "--safety", "1"]);
    assert!((float(&shuttle, "speed_bound", 0) - 1.6664e4).abs() < 20.0);
    assert_eq!(qden(&["comm", "swap", "--distance", "-5", "--node", "14nm"]).status.code(), Some(2));
}

#[test]
fn control_commands() {
    let budget = json(&["control", "budget", "--cooling", "1", "--per-channel", "1e-3", "--mux", "10"]);
    assert_eq!(float(&budget, "max_qubits", 0), 10_000.0);
    let adc = json(&["control", "adc", "--power", "0.2", "--rate", "2e8", "--bits", "10"]);
    let w = float(&adc, "fom_walden", 0);
    assert!((0.95e-12..=1.0e-12).contains(&w));
    let dac = json(&["control", "dac", "--rate", "1e9", "--energy", "30e-12"]);
    assert!((float(&dac, "power", 0) - 0.03).abs() < 1e-12);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qden(&["layout"]).status.code(), Some(2));
    assert_eq!(qden(&["layout", "--node", "7nm", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(qden(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn every_subcommand_supports_every_format() {
    let commands: [&[&str]; 10] = [
        &["nodes", "list"],
        &["layout", "--node", "14nm"],
        &["density", "--code", "steane", "--node", "14nm"],
        &["window", "--node", "14nm"],
        &["shor", "--bits", "128", "--node", "14nm"],
        &["comm", "swap", "--distance", "500", "--node", "10nm"],
        &["comm", "shuttle", "--distance", "1e-5"],
        &["control", "budget", "--cooling", "1", "--per-channel", "1e-3"],
        &["control", "adc", "--power", "1e-3", "--rate", "1e9", "--bits", "8"],
        &["control", "dac", "--rate", "1e9", "--energy", "1e-12"],
    ];
    for cmd in commands {
        for format in ["table", "csv", "json"] {
            let mut args = cmd.to_vec();
            args.extend(["--format", format]);
            let first = qden(&args);
            let text = stdout(&first);
            assert!(!text.is_empty());
            // Byte-identical on repeat.
            assert_eq!(qden(&args).stdout, first.stdout, "{args:?}");
            if format == "json" {
                let env = ReportEnvelope::from_json(&text).unwrap();
                assert_eq!(ReportEnvelope::from_json(&env.to_json()).unwrap(), env);
                assert!(env.unitless_numeric().is_empty(), "{args:?}");
                assert!(!env.inputs.is_empty() || cmd[0] == "nodes", "{args:?}");
            }
        }
    }
}
