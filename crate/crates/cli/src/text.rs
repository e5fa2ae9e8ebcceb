//! Plain-text rendering of a [`Report`].

use std::fmt::Write;

use crate::analysis::{IndexView, Report, Status};

fn index(v: &IndexView) -> String {
    let seq: Vec<String> = v.sequence.iter().map(usize::to_string).collect();
    format!("{} (d_N = {}, stable from N = {})", v.value, seq.join(", "), v.stabilized_at)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render(r: &Report) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "L: {n}×{n}, degree {}", r.degree, n = r.n).unwrap();
    writeln!(w, "det L = {}", r.det).unwrap();
    if let Some(marker) = &r.marker {
        writeln!(w, "identically singular: {marker}").unwrap();
    }
    if let Some(s) = &r.spectrum {
        if s.rational_eigenvalues.is_empty() {
            writeln!(w, "rational eigenvalues: none").unwrap();
        } else {
            let roots: Vec<String> =
                s.rational_eigenvalues.iter().map(|e| format!("{} (m = {})", e.value, e.multiplicity)).collect();
            writeln!(w, "rational eigenvalues: {}", roots.join(", ")).unwrap();
        }
        for f in &s.factors {
            writeln!(w, "  factor {} with multiplicity {}", f.factor, f.multiplicity).unwrap();
        }
        writeln!(w, "finite multiplicity: {} ({} irrational)", s.total_finite_multiplicity, s.irrational_multiplicity)
            .unwrap();
    }
    if let Some(a) = &r.admissibility {
        writeln!(w, "admissible: {}", yes_no(a.admissible)).unwrap();
        writeln!(w, "  curve ideal: <{}>", a.curve_ideal.join(", ")).unwrap();
        for wit in &a.witnesses {
            writeln!(w, "  gcd witness at {}: {}", wit.at, wit.gcd).unwrap();
        }
        if let Some(note) = &a.note {
            writeln!(w, "  {note}").unwrap();
        }
    }
    for e in &r.eigenvalues {
        writeln!(w, "at λ = {}: multiplicity {}", e.at, e.multiplicity).unwrap();
        if let Some(v) = &e.affine_index {
            writeln!(w, "  affine index {}", index(v)).unwrap();
        }
        if let Some(v) = &e.resolution_index {
            writeln!(w, "  resolution index {}", index(v)).unwrap();
        }
        if let Some(note) = &e.note {
            writeln!(w, "  {note}").unwrap();
        }
    }
    if let Some(bz) = &r.bezout {
        let b = &bz.report;
        writeln!(
            w,
            "bezout: finite {} + infinity {} = {} vs d·n = {}",
            b.finite_sum,
            b.infinity_multiplicity,
            b.total,
            b.d * b.n
        )
        .unwrap();
        writeln!(w, "  meets infinity: {}", yes_no(b.meets_infinity)).unwrap();
        writeln!(w, "  rational projective points: {{{}}}", bz.projective_points.join(", ")).unwrap();
    }
    if let Some(c) = &r.classical {
        if c.applicable {
            if let Some(t) = &c.t {
                let rows: Vec<String> = t
                    .to_rows()
                    .iter()
                    .map(|row| format!("[{}]", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
                    .collect();
                writeln!(w, "classical: T = [{}]", rows.join(", ")).unwrap();
            }
            if c.split == Some(false) {
                writeln!(w, "  characteristic polynomial does not split over Q").unwrap();
            }
            for e in &c.eigenvalues {
                writeln!(
                    w,
                    "  at {}: ν = {}, kernel dims {:?}, generalized dim {}",
                    e.eigenvalue, e.nu, e.kernel_dims, e.generalized_dim
                )
                .unwrap();
            }
            if let Some(id) = &c.identity {
                writeln!(w, "  Σ multiplicities = {} = n: {}", id.multiplicity_sum, yes_no(id.holds)).unwrap();
            }
        } else {
            writeln!(w, "classical: not applicable, needs {}", c.reason.as_deref().unwrap_or("")).unwrap();
        }
    }
    if !r.checks.is_empty() {
        writeln!(w, "checks:").unwrap();
        for c in &r.checks {
            let tag = match (c.holds, c.required) {
                (true, _) => "ok",
                (false, true) => "FAIL",
                (false, false) => "note",
            };
            write!(w, "  [{tag}] {}", c.name).unwrap();
            if let Some(note) = &c.note {
                write!(w, " ({note})").unwrap();
            }
            writeln!(w).unwrap();
        }
    }
    let status = match r.status {
        Status::Ok => "ok",
        Status::Failed => "failed",
        Status::Degenerate => "degenerate",
    };
    writeln!(w, "status: {status}").unwrap();
    out
}
