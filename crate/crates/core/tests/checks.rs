use num_bigint::BigInt;
use real_enum_core::checks::{
    check_divisibility, check_monotonicity, check_sign, check_table, check_vanishing, Status,
};
use real_enum_core::floors::welschinger_toric;
use real_enum_core::lattice::SurfaceModel;
use real_enum_core::table::{
    Flags, InvariantTable, TableEntry, TableMeta, CONVENTION_F_MASS, F_STANDARD,
};

fn table(surface: &str, flags: Flags, entries: &[(&[i64], u64, i64)]) -> InvariantTable {
    let mut t = InvariantTable::new(TableMeta {
        surface: surface.into(),
        real_structure: "synthetic".into(),
        l: "S1".into(),
        f: F_STANDARD.into(),
        flags,
        convention: Some(CONVENTION_F_MASS.into()),
        kind: Some("welschinger".into()),
        source: Some("planted".into()),
    });
    for &(class, s, v) in entries {
        t.entries.push(TableEntry { class: class.to_vec(), s, value: BigInt::from(v) });
    }
    t
}

fn chain() -> Flags {
    Flags { chain_of_spheres: Some(true), f_nontrivial: Some(true) }
}

#[test]
fn planted_violations_are_detected() {
    // r = 2 with a nonzero value
    let t = table("cp2_1", chain(), &[(&[3, -1], 2, 0), (&[3, -1], 1, 4)]);
    let r = check_vanishing(&t).unwrap();
    assert_eq!(r.count(Status::Pass), 1);
    assert_eq!(r.count(Status::Fail), 1);

    // r = 1, c1.d = 8: the value must be divisible by 4
    let t = table("cp2_1", chain(), &[(&[3, -1], 3, 6)]);
    assert!(check_divisibility(&t).unwrap().has_failures());
    let t = table("cp2_1", chain(), &[(&[3, -1], 3, 8)]);
    assert!(!check_divisibility(&t).unwrap().has_failures());

    // one node: the value must be nonpositive
    let t = table("cp2_1", chain(), &[(&[3, -1], 3, 4)]);
    assert!(check_sign(&t).unwrap().has_failures());

    let r = check_monotonicity(&[(0, BigInt::from(3)), (2, BigInt::from(5))]);
    assert!(r.has_failures());
    let r = check_monotonicity(&[(0, BigInt::from(-1))]);
    assert!(r.has_failures());
    let r = check_monotonicity(&[(2, BigInt::from(3)), (2, BigInt::from(4))]);
    assert!(r.has_failures());
}

#[test]
fn self_computed_tables_pass() {
    let cp2 = SurfaceModel::cp2();
    let mut t = table("cp2", Flags::default(), &[]);
    for d in 1..=4 {
        let value = welschinger_toric(&cp2, &cp2.class(vec![d]).unwrap()).unwrap();
        t.entries.push(TableEntry { class: vec![d], s: 0, value });
    }
    let r = check_table(&t).unwrap();
    assert!(!r.has_failures());
    assert_eq!(r.count(Status::NotApplicable), r.lines.len());

    // with the flags forced on, s = 0 leaves r >= 2 and every entry must vanish
    t.meta.flags = chain();
    let r = check_vanishing(&t).unwrap();
    assert!(r.has_failures());
}

#[test]
fn reports_render_in_every_format() {
    let t = table("cp2_1", chain(), &[(&[3, -1], 3, 6)]);
    let r = check_table(&t).unwrap();
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(json["lines"].as_array().unwrap().len(), 3);
    assert!(r.to_csv().starts_with("entry,check,status,detail\n"));
    assert_eq!(r.to_csv().lines().count(), 4);
    assert!(r.to_text().contains("fail"));
}
