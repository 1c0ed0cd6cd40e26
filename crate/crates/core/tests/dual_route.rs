//! Every table that has two independent constructions, compared exactly.

use partcount_core::carlitz::{carlitz_table_gf, carlitz_table_rec};
use partcount_core::identities::{default_sets, verify, verify_all, Status};
use partcount_core::partitions::{np_table_conv, np_table_gf, nq_table_conv, nq_table_gf};
use partcount_core::PartSet;

const N: usize = 500;

#[test]
fn number_of_parts_tables_agree() {
    for set in default_sets() {
        assert_eq!(
            np_table_gf(&set, N).values,
            np_table_conv(&set, N).values,
            "np {set}"
        );
        assert_eq!(
            nq_table_gf(&set, N).values,
            nq_table_conv(&set, N).values,
            "nq {set}"
        );
    }
}

#[test]
fn carlitz_tables_agree() {
    for set in default_sets() {
        assert_eq!(
            carlitz_table_gf(&set, N),
            carlitz_table_rec(&set, N),
            "{set}"
        );
    }
}

#[test]
fn complement_identities_on_small_finite_sets() {
    for spec in ["finite:2", "finite:1,2", "finite:2,3"] {
        let set: PartSet = spec.parse().unwrap();
        for id in ["T2.3a", "T2.3b"] {
            let report = verify(id, &set, 200).unwrap();
            assert_eq!(report.status, Status::AllHold, "{id} on {spec}: {report:?}");
        }
    }
}

#[test]
fn whole_catalog_holds_on_default_sets() {
    let reports = verify_all(&default_sets(), 120);
    assert!(
        reports.iter().all(|r| r.status != Status::Failure),
        "{:?}",
        reports
            .iter()
            .filter(|r| r.status == Status::Failure)
            .collect::<Vec<_>>()
    );
    let held: std::collections::HashSet<&str> = reports
        .iter()
        .filter(|r| r.status == Status::AllHold)
        .map(|r| r.id.as_str())
        .collect();
    assert!(held.len() >= 24, "only {} identities ran", held.len());
}
