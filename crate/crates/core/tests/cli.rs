use greenring::cli::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

fn greenring(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("greenring").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &str) -> String {
    let (code, out, err) = greenring(args);
    assert_eq!(code, EXIT_OK, "{args}: {err}");
    out
}

#[test]
fn tensor_command() {
    assert_eq!(ok("tensor --p 5 --alpha 3 2 11"), "V12 + V10\n");
    assert_eq!(ok("tensor --p 2 --alpha 1 1 2"), "V2\n");
    assert_eq!(
        ok("tensor --p 3 --alpha 2 --format json 2 2"),
        "{\"p\":3,\"alpha\":2,\"coeffs\":{\"1\":1,\"3\":1}}\n"
    );
    assert_eq!(ok("tensor --p 3 --alpha 2 --format csv 2 2"), "1,1\n3,1\n");
}

#[test]
fn basis_commands() {
    assert_eq!(ok("ubasis --p 5 --alpha 3 12"), "V12 - V8 + V2\n");
    assert_eq!(ok("cousins 63 --base 5"), "37 43 57 63\n");
    assert_eq!(
        ok("cousins --n 63 --base 5 --format json"),
        "[37,43,57,63]\n"
    );
    let pbm = ok("matrix --p 3 --alpha 3 --direction v-to-u --format pbm");
    let mut lines = pbm.lines();
    assert_eq!(lines.next(), Some("P1"));
    assert_eq!(lines.next(), Some("27 27"));
    assert_eq!(lines.count(), 27);
    assert_eq!(ok("matrix --p 2 --alpha 1"), "█·\n·█\n");
    assert_eq!(ok("matrix --p 2 --alpha 2"), "█···\n·█··\n█·█·\n···█\n");
    assert_eq!(
        ok("matrix --p 2 --alpha 2 --direction u-to-v --format csv"),
        "1,0,0,0\n0,1,0,0\n-1,0,1,0\n0,0,0,1\n"
    );
    assert_eq!(
        ok("matrix --p 2 --alpha 2 --direction u-to-v --format json"),
        "[[1,0,0,0],[0,1,0,0],[-1,0,1,0],[0,0,0,1]]\n"
    );
}

#[test]
fn trick_command() {
    assert_eq!(
        ok("trick 62 --base 5"),
        "62 = (3)(3)(2) + (3)(2)(3) + (2)(3)(3) + (2)(2)(2)\n"
    );
    assert_eq!(ok("trick 7 --base 10"), "7 = 7\n");
    assert_eq!(ok("trick 100 --base 10"), "100 = (10)(10)\n");
    assert!(ok("trick 62 --base 5 --format json").contains("\"sum\":62"));
}

#[test]
fn checking_commands() {
    assert!(ok("rank 12 --p 2").contains("quotient_rank 4, phi 4"));
    assert!(ok("rank 12 --p 3 --format json").contains("\"quotient_rank\":4,\"phi_n\":4"));
    assert!(ok("verify --p 3 --alpha 3").contains(" 0 mismatches"));
    assert!(ok("verify --p 2 --alpha 3 --format json").contains("\"mismatches\":[]"));
    assert_eq!(ok("relations --p 5 --alpha 3"), "F0 F1 F2 all vanish\n");
}

#[test]
fn usage_errors() {
    for args in [
        "tensor --p 4 --alpha 1 1 1",
        "tensor --p 3 --alpha 1 1 4",
        "tensor 1 1",
        "frobnicate",
        "trick 5 --base 1",
        "trick",
        "cousins 5 --format pbm",
        "rank 0 --p 2",
        "matrix --p 3 --alpha 2 --direction diagonal",
    ] {
        let (code, out, err) = greenring(args);
        assert_eq!(code, EXIT_USAGE, "{args}: {out}");
        assert!(!err.is_empty(), "{args}");
    }
    assert_ne!(EXIT_CHECK_FAILED, EXIT_OK);
}

#[test]
fn output_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("greenring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.csv");
    let args = format!(
        "matrix --p 3 --alpha 2 --format csv --out {}",
        path.display()
    );
    assert_eq!(ok(&args), "");
    let first = std::fs::read(&path).unwrap();
    ok(&args);
    assert_eq!(std::fs::read(&path).unwrap(), first);
    assert_eq!(first.iter().filter(|&&b| b == b'\n').count(), 9);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(
        ok("tensor --p 7 --alpha 2 --format json 13 30"),
        ok("tensor --p 7 --alpha 2 --format json 13 30")
    );
}
