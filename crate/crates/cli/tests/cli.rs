use std::process::Command;

use horadam_cli::{run, Config, Output, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

fn horadam(args: &str) -> horadam_cli::Outcome {
    let argv = std::iter::once("horadam").chain(args.split_whitespace());
    run(argv, Config::default())
}

#[test]
fn json_round_trip_is_idempotent() {
    let cases = [
        "sum --kind u -p 3 -q 2 --n 1 --k 3 --z 1/2 --output json",
        "sum --kind w -a 3 -b 2 -p 1 -q -1 --n 3 --r 2 --s -1 --k 5 --z -2/3 --output json",
        "gf --kind w -a 1/2 -b 2 -p 3 -q -2 --n 2 --r 2 --s 1 --output json",
        "series --kind v -p 1 -q -1 --n 2 --m 6 --output json",
        "term --kind u -p 2 -q 3 --n -5 --output json",
    ];
    for case in cases {
        let out = horadam(case);
        assert_eq!(out.code, EXIT_OK, "{case}: {}", out.stderr);
        let text = out.stdout.trim_end();
        let parsed = Output::from_json(text).unwrap();
        assert_eq!(parsed.json(), text);
        assert_eq!(Output::from_json(&parsed.json()).unwrap(), parsed);
    }
}

#[test]
fn scalar_json_shape() {
    let out = horadam("sum --kind u -p 3 -q 2 --n 1 --k 3 --z 1/2 --output json");
    assert_eq!(out.stdout, "{\"value\":\"17/8\"}\n");
}

#[test]
fn fallback_can_be_disabled() {
    let argv = "horadam sum --kind u -p 3 -q 2 --k 3 --z 1/2".split_whitespace();
    let out = run(argv, Config { no_fallback: true });
    assert_eq!(out.code, EXIT_DOMAIN);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("denominator vanishes"));
}

#[test]
fn environment_switch_reaches_the_binary() {
    let out = Command::new(env!("CARGO_BIN_EXE_horadam"))
        .args("sum --kind u -p 3 -q 2 --k 3 --z 1/2".split_whitespace())
        .env("HORADAM_NO_FALLBACK", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_DOMAIN));
}

#[test]
fn exit_codes() {
    assert_eq!(horadam("term -p 1 -q x --n 2").code, EXIT_USAGE);
    assert_eq!(horadam("term --kind w -p 1 -q -1 --n 2").code, EXIT_USAGE);
    assert_eq!(horadam("frobnicate").code, EXIT_USAGE);
    assert_eq!(horadam("--help").code, EXIT_OK);
    assert_eq!(horadam("--version").code, EXIT_OK);
    // p^2 = 4q
    assert_eq!(horadam("term --kind u -p 2 -q 1 --n 2").code, EXIT_DOMAIN);
    assert_eq!(horadam("term --kind u -p 0 -q 1 --n 2").code, EXIT_DOMAIN);
    assert_eq!(horadam("sum --kind u -p 1 -q -1 --k -2").code, EXIT_DOMAIN);
}

#[test]
fn terms_by_both_methods() {
    assert_eq!(horadam("term --kind u -p 1 -q -1 --n 10").stdout, "55\n");
    assert_eq!(horadam("term --kind u -p 1 -q -1 --n -10 --binet").stdout, "-55\n");
    assert_eq!(horadam("term --kind v -p 1 -q -1 --n 5").stdout, "11\n");
    assert_eq!(horadam("term -a 3 -b 2 -p 1 -q -1 --n 4").stdout, "12\n");
}

#[test]
fn generating_function_text() {
    let out = horadam("gf --kind u -p 1 -q -1 --n 1");
    assert_eq!(out.stdout, "(0 + 1*z) / (1 + -1*z + -1*z^2)\n");
}

#[test]
fn power_sums() {
    // 1 + 1 + 8 + 27 + 125
    assert_eq!(horadam("sum --kind u -p 1 -q -1 --n 3 --r 1 --s 1 --k 4").stdout, "162\n");
}

#[test]
fn small_verification_grid_passes() {
    let out = horadam("verify --scale small");
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert_eq!(out.stdout.lines().count(), 3);
    assert!(out.stdout.lines().all(|l| l.starts_with("ok")));
}
