//! Cross-checks of Groebner-based answers against independent computations.

use unproj_core::linalg::rank;
use unproj_core::monomial::monomials_of_degree;
use unproj_core::unprojection::check_normalization;
use unproj_core::*;

/// `dim (R/I)_d` by linear algebra on `{w·g : deg(w·g) = d}`, no Groebner basis.
fn quotient_dim_oracle(ideal: &Ideal, d: u64) -> u64 {
    let ring = ideal.ring();
    let field = ring.field();
    let weights = ring.weights();
    let basis = monomials_of_degree(&weights, d);
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let gd = g.homogeneous_degree().unwrap();
        if gd > d {
            continue;
        }
        for w in monomials_of_degree(&weights, d - gd) {
            let p = g.mul_term(&field.one(), &w);
            rows.push(basis.iter().map(|b| p.coefficient(b)).collect::<Vec<_>>());
        }
    }
    basis.len() as u64 - rank(field, &rows) as u64
}

fn oracle_table(ideal: &Ideal, up_to: u64) -> Vec<u64> {
    (0..=up_to).map(|d| quotient_dim_oracle(ideal, d)).collect()
}

#[test]
fn quadric_cone_hilbert_matches_enumeration() {
    let s = build_scroll(1, 1).unwrap();
    assert_eq!(oracle_table(s.q(), 3), vec![1, 4, 9, 16]);
    assert_eq!(s.hilbert_function(3).unwrap().values(), vec![1, 4, 9, 16]);
}

#[test]
fn scroll_hilbert_tables_match_oracle() {
    for (m, n) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
        let s = build_scroll(m, n).unwrap();
        assert_eq!(
            s.hilbert_function(4).unwrap().values(),
            oracle_table(s.q(), 4),
            "F({m},{n})"
        );
        let q1 = s.q1().unwrap();
        assert_eq!(
            q1.hilbert_function(4).unwrap().values(),
            oracle_table(&q1, 4)
        );
    }
}

#[test]
fn weighted_unprojection_tables_match_oracle() {
    let s = build_scroll(1, 2).unwrap();
    for f in ["x12^2", "x01^2 - x12^2", "x01*x12 + x00*x10"] {
        let f = parse_polynomial(s.ring(), f).unwrap();
        let u = build_unprojection(&s, &f).unwrap();
        assert_eq!(
            u.hilbert_table(4).unwrap().values(),
            oracle_table(u.q2_minors(), 4)
        );
    }
    let s = build_scroll(2, 2).unwrap();
    let f = parse_polynomial(s.ring(), "x02^3 + x12^3").unwrap();
    let u = build_unprojection(&s, &f).unwrap();
    assert_eq!(
        u.hilbert_table(4).unwrap().values(),
        oracle_table(u.q2_minors(), 4)
    );
}

#[test]
fn unprojection_of_f11_has_the_table_of_f12() {
    let s = build_scroll(1, 1).unwrap();
    let f = parse_polynomial(s.ring(), "x11").unwrap();
    let u = build_unprojection(&s, &f).unwrap();
    let target = build_scroll(1, 2).unwrap();
    assert_eq!(
        u.hilbert_table(5).unwrap(),
        target.hilbert_function(5).unwrap()
    );
}

#[test]
fn groebner_bases_are_reduced_and_pass_buchberger() {
    for (m, n) in [(1, 2), (2, 2), (2, 3)] {
        let s = build_scroll(m, n).unwrap();
        let gb = s.q().groebner().unwrap();
        assert!(gb.is_reduced());
        assert!(gb.satisfies_buchberger_criterion());
    }
    let s = build_scroll(1, 2).unwrap();
    assert_eq!(s.q().generators().len(), 3);
    assert_eq!(s.krull_dimension().unwrap(), 3);
}

#[test]
fn other_orders_give_the_same_ideal() {
    let s = build_scroll(2, 2).unwrap();
    let lex = s
        .q()
        .groebner_with(MonomialOrder::Lex, &Budget::default())
        .unwrap();
    let back = lex.basis().iter().map(|g| g.reinterpret(s.ring()).unwrap());
    let again = Ideal::new(s.ring(), back).unwrap();
    assert!(again.equals(s.q()).unwrap());
}

#[test]
fn dimension_and_growth_agree() {
    for (m, n) in [(1, 1), (1, 2), (2, 2), (1, 3)] {
        let s = build_scroll(m, n).unwrap();
        let (r, c) = s.hilbert_function(7).unwrap().growth().unwrap();
        assert_eq!(r + 1, s.krull_dimension().unwrap());
        assert_eq!(c as usize, m + n);
    }
}

#[test]
fn literal_basis_conflicts_only_for_m_one() {
    let s = build_scroll(1, 2).unwrap();
    assert!(s.verify_basis_claim(3).unwrap().literal_conflicts > 0);
    let s = build_scroll(2, 3).unwrap();
    assert_eq!(s.verify_basis_claim(3).unwrap().literal_conflicts, 0);
}

#[test]
fn prime_field_agrees_with_rationals() {
    let fp = Field::prime(32003).unwrap();
    for (m, n) in [(1, 2), (2, 3)] {
        let sq = build_scroll(m, n).unwrap();
        let sp = ScrollData::new(m, n, fp).unwrap();
        assert_eq!(
            sq.hilbert_function(4).unwrap(),
            sp.hilbert_function(4).unwrap()
        );
        let f = format!("x0{m}^2 - 3*x1{n}^2 + x00*x10");
        let uq = build_unprojection(&sq, &parse_polynomial(sq.ring(), &f).unwrap()).unwrap();
        let up = build_unprojection(&sp, &parse_polynomial(sp.ring(), &f).unwrap()).unwrap();
        assert_eq!(uq.hilbert_table(4).unwrap(), up.hilbert_table(4).unwrap());
        assert!(check_normalization(&sp, &parse_polynomial(sp.ring(), &f).unwrap()).unwrap());
    }
}
