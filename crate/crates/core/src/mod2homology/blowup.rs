use serde::{Deserialize, Serialize};

use super::gf2::{BitVec, GF2Matrix};
use super::model::RealHomologyModel;
use super::HomologyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlowupKind {
    /// Blow up a real point of `L`; `L` gains a crosscap.
    RealPointOnL,
    /// Blow up a pair of complex conjugate points.
    ConjugatePair,
}

fn extend_matrix(m: &GF2Matrix, extra: usize) -> GF2Matrix {
    let n = m.rows() + extra;
    let mut out = GF2Matrix::zeros(n, m.cols() + extra);
    for i in 0..m.rows() {
        for j in m.row(i).ones() {
            out.set(i, j, true);
        }
    }
    out
}

/// A class `C` with `C.L = 1` pairing trivially with every `x + tau(x)`, so
/// that its strict transform through the blown-up point is a real curve.
fn invariant_curve_meeting_l(model: &RealHomologyModel) -> Result<BitVec, HomologyError> {
    let p = &model.ambient_pairing;
    let mut rows = vec![p.mul_vec(&model.l_class)];
    let mut rhs = vec![true];
    for j in 0..model.dimension() {
        let moved = model.image_of(&model.tau.column(j)).xor(&model.images[j]);
        if !moved.is_zero() {
            rows.push(p.mul_vec(&moved));
            rhs.push(false);
        }
    }
    let system = GF2Matrix::from_rows(model.ambient_labels.len(), rows);
    system
        .solve(&BitVec::from_bits(&rhs))
        .ok_or_else(|| HomologyError::Consistency(format!("{}: no real class meets L once", model.name)))
}

/// The model of the blown-up surface, with `L` replaced by its strict
/// transform.
pub fn blowup_transform(
    model: &RealHomologyModel,
    kind: BlowupKind,
) -> Result<RealHomologyModel, HomologyError> {
    let a = model.ambient_labels.len();
    let n = model.dimension();
    let mut m = model.clone();
    match kind {
        BlowupKind::ConjugatePair => {
            m.name = format!("{}+pair", model.name);
            m.ambient_labels.push(format!("e{a}+"));
            m.ambient_labels.push(format!("e{a}-"));
            m.ambient_pairing = extend_matrix(&model.ambient_pairing, 2);
            m.ambient_pairing.set(a, a, true);
            m.ambient_pairing.set(a + 1, a + 1, true);
            m.l_class = model.l_class.extended(2);
            m.images = model.images.iter().map(|v| v.extended(2)).collect();
            m.images.push(BitVec::unit(a + 2, a));
            m.images.push(BitVec::unit(a + 2, a + 1));
            m.labels.push(format!("e{a}+"));
            m.labels.push(format!("e{a}-"));
            m.tau = extend_matrix(&model.tau, 2);
            m.tau.set(n, n + 1, true);
            m.tau.set(n + 1, n, true);
            m.g_generators = model.g_generators.iter().map(|v| v.extended(2)).collect();
            let mut pair = BitVec::unit(n + 2, n);
            pair.set(n + 1, true);
            m.g_generators.push(pair);
            m.claimed_basis = model.claimed_basis.iter().map(|v| v.extended(2)).collect();
        }
        BlowupKind::RealPointOnL => {
            m.name = format!("{}+point", model.name);
            let meeting = if model.l_class.is_zero() {
                None
            } else {
                Some(invariant_curve_meeting_l(model)?)
            };
            let added = 1 + usize::from(meeting.is_some());
            m.ambient_labels.push(format!("e{a}"));
            m.ambient_pairing = extend_matrix(&model.ambient_pairing, 1);
            m.ambient_pairing.set(a, a, true);
            m.l_class = model.l_class.extended(1);
            m.l_class.set(a, true);
            m.b1_l += 1;
            m.images = model.images.iter().map(|v| v.extended(1)).collect();
            m.labels.push(format!("K{a}"));
            m.images.push(BitVec::zeros(a + 1));
            if let Some(c) = meeting {
                m.labels.push(format!("C{a}~"));
                let mut image = c.extended(1);
                image.set(a, true);
                m.images.push(image);
            }
            m.tau = extend_matrix(&model.tau, added);
            for i in n..n + added {
                m.tau.set(i, i, true);
            }
            m.g_generators = model.g_generators.iter().map(|v| v.extended(added)).collect();
            for i in n..n + added {
                m.g_generators.push(BitVec::unit(n + added, i));
            }
            m.claimed_basis = model.claimed_basis.iter().map(|v| v.extended(added)).collect();
        }
    }
    m.validate()?;
    Ok(m)
}
