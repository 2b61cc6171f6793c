use centauts::{parse_group_text, CorpusError, GroupSpecFile};
use centauts_core::catalog::build;
use centauts_core::group::DEFAULT_ELEMENT_CAP;
use centauts_core::Error;

const CAP: usize = DEFAULT_ELEMENT_CAP;

#[test]
fn cayley_c2() {
    let (name, g) = parse_group_text(
        r#"{"name":"c2","format":"cayley","n":2,"table":[[0,1],[1,0]]}"#,
        CAP,
    )
    .unwrap();
    assert_eq!(name, "c2");
    assert_eq!(g.order(), 2);
}

#[test]
fn perm_d8() {
    let text = r#"{"name":"d8","format":"perm","degree":4,"generators":[[1,2,3,0],[3,2,1,0]]}"#;
    let (_, g) = parse_group_text(text, CAP).unwrap();
    assert_eq!(g.order(), 8);
    assert_eq!(g.center().order(), 2);
}

#[test]
fn nested_product() {
    let text = r#"{"name":"p","format":"product","factors":["D8",
        {"name":"c2","format":"cayley","n":2,"table":[[0,1],[1,0]]}]}"#;
    let (_, g) = parse_group_text(text, CAP).unwrap();
    assert_eq!(g.order(), 16);
    assert_eq!(g.center().order(), 4);
}

#[test]
fn non_latin_table_is_rejected() {
    let text = r#"{"name":"bad","format":"cayley","n":2,"table":[[0,1],[1,1]]}"#;
    assert!(matches!(
        parse_group_text(text, CAP),
        Err(CorpusError::Group(Error::NotAGroup { .. }))
    ));
}

#[test]
fn errors_carry_locations() {
    let cases = [
        (
            r#"{"name":"x","format":"cayley","n":2,"table":[[0,1],[1]]}"#,
            "table[1]",
        ),
        (
            r#"{"name":"x","format":"cayley","n":2,"table":[[0,1],[1,7]]}"#,
            "table[1][1]",
        ),
        (r#"{"name":"x","format":"cayley","table":[[0]]}"#, "n"),
        (
            r#"{"name":"x","format":"perm","degree":3,"generators":[[0,0,1]]}"#,
            "generators[0]",
        ),
        (
            r#"{"name":"x","format":"product","factors":["D8","Nope"]}"#,
            "factors[1]",
        ),
        (
            r#"{"name":"x","format":"product","factors":[{"name":"y","format":"cayley","n":1}]}"#,
            "factors[0].table",
        ),
    ];
    for (text, location) in cases {
        match parse_group_text(text, CAP) {
            Err(CorpusError::Parse(e)) => assert_eq!(e.location, location, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn syntax_errors_report_line_and_column() {
    match parse_group_text("{\n  \"name\": \"x\",\n  \"format\": cayley\n}", CAP) {
        Err(CorpusError::Parse(e)) => assert!(e.location.starts_with("line 3"), "{}", e.location),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        parse_group_text(
            r#"{"name":"x","format":"cayley","n":1,"table":[[0]],"extra":1}"#,
            CAP
        ),
        Err(CorpusError::Parse(_))
    ));
}

#[test]
fn size_cap_is_enforced() {
    let text = r#"{"name":"p","format":"product","factors":["D8","D8"]}"#;
    assert!(matches!(
        parse_group_text(text, 32),
        Err(CorpusError::Group(Error::SizeLimitExceeded { .. }))
    ));
}

#[test]
fn emitted_cayley_files_round_trip() {
    let sources = [
        r#"{"name":"d8","format":"perm","degree":4,"generators":[[1,2,3,0],[3,2,1,0]]}"#
            .to_string(),
        r#"{"name":"q","format":"product","factors":["Q8","C3"]}"#.to_string(),
        serde_json::to_string(&GroupSpecFile::cayley("heis", &build("Heis3").unwrap())).unwrap(),
    ];
    for text in sources {
        let (name, g) = parse_group_text(&text, CAP).unwrap();
        let emitted = serde_json::to_string(&GroupSpecFile::cayley(&name, &g)).unwrap();
        let (again_name, again) = parse_group_text(&emitted, CAP).unwrap();
        assert_eq!(again_name, name);
        assert_eq!(again.table(), g.table());
    }
}
