use serde::{Deserialize, Serialize};

use super::gf2::{rank_of, BitVec, GF2Matrix};
use super::HomologyError;

/// Mod-2 data of a real surface `X` with a chosen component `L` of its real
/// part: a basis of `H_2(X \ L)`, its images in `H_2(X)`, the action of the
/// real structure, and generators of the subgroup `G`.
///
/// Basis elements whose image is zero stand for the kernel of
/// `H_2(X \ L) -> H_2(X)`; they are fixed by the involution and belong to `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealHomologyModel {
    pub name: String,
    /// Basis of `H_2(X; Z/2)`.
    pub ambient_labels: Vec<String>,
    /// Intersection form on `H_2(X; Z/2)`.
    pub ambient_pairing: GF2Matrix,
    /// Class of `L` in `H_2(X; Z/2)`.
    pub l_class: BitVec,
    /// First Betti number of `L`.
    pub b1_l: usize,
    /// Basis of `H_2(X \ L; Z/2)`.
    pub labels: Vec<String>,
    /// Image of each basis element in `H_2(X; Z/2)`.
    pub images: Vec<BitVec>,
    /// Action of the real structure; column `j` is the image of `labels[j]`.
    pub tau: GF2Matrix,
    pub g_generators: Vec<BitVec>,
    pub claimed_basis: Vec<BitVec>,
}

impl RealHomologyModel {
    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    /// Number of basis elements with zero image.
    pub fn kernel_dim(&self) -> usize {
        self.images.iter().filter(|v| v.is_zero()).count()
    }

    /// Mod-2 intersection products of the basis of `H_2(X \ L)`.
    pub fn pairing(&self) -> GF2Matrix {
        let n = self.dimension();
        let mut m = GF2Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.ambient_pairing.bilinear(&self.images[i], &self.images[j]));
            }
        }
        m
    }

    /// Image in `H_2(X)` of a vector written in the basis `labels`.
    pub fn image_of(&self, v: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.ambient_labels.len());
        for i in v.ones() {
            out.xor_assign(&self.images[i]);
        }
        out
    }

    pub fn label_vector(&self, names: &[&str]) -> Result<BitVec, HomologyError> {
        let mut v = BitVec::zeros(self.dimension());
        for name in names {
            let i = self
                .labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| HomologyError::Consistency(format!("unknown label `{name}`")))?;
            v.flip(i);
        }
        Ok(v)
    }

    /// Checks every structural property the model must have.
    pub fn validate(&self) -> Result<(), HomologyError> {
        let bad = |m: String| Err(HomologyError::Consistency(format!("{}: {m}", self.name)));
        let n = self.dimension();
        let a = self.ambient_labels.len();
        if !self.ambient_pairing.is_well_formed()
            || self.ambient_pairing.rows() != a
            || self.ambient_pairing.cols() != a
        {
            return bad("ambient pairing has the wrong shape".into());
        }
        if !self.ambient_pairing.is_symmetric() {
            return bad("ambient pairing is not symmetric".into());
        }
        if self.ambient_pairing.rank() != a {
            return bad("ambient basis is not free (pairing is degenerate)".into());
        }
        if self.l_class.len() != a || self.images.len() != n || self.images.iter().any(|v| v.len() != a) {
            return bad("classes have the wrong length".into());
        }
        if !self.tau.is_well_formed() || self.tau.rows() != n || self.tau.cols() != n {
            return bad("tau has the wrong shape".into());
        }
        for v in self.g_generators.iter().chain(&self.claimed_basis) {
            if v.len() != n {
                return bad("generator has the wrong length".into());
            }
        }
        if self.tau.mul(&self.tau) != GF2Matrix::identity(n) {
            return bad("tau is not an involution".into());
        }
        for (i, image) in self.images.iter().enumerate() {
            if self.ambient_pairing.bilinear(image, &self.l_class) {
                return bad(format!("`{}` meets L", self.labels[i]));
            }
        }
        let pairing = self.pairing();
        for i in 0..n {
            for j in 0..n {
                let ti = self.tau.column(i);
                let tj = self.tau.column(j);
                let moved = self.ambient_pairing.bilinear(&self.image_of(&ti), &self.image_of(&tj));
                if moved != pairing.get(i, j) {
                    return bad(format!(
                        "tau does not preserve the pairing of `{}` and `{}`",
                        self.labels[i], self.labels[j]
                    ));
                }
            }
        }
        for (i, image) in self.images.iter().enumerate() {
            if image.is_zero() {
                let e = BitVec::unit(n, i);
                if self.tau.mul_vec(&e) != e {
                    return bad(format!("kernel element `{}` is not fixed", self.labels[i]));
                }
            }
        }
        if self.kernel_dim() != self.b1_l {
            return bad(format!(
                "{} kernel elements but b1(L) = {}",
                self.kernel_dim(),
                self.b1_l
            ));
        }
        if rank_of(&self.images) + self.kernel_dim() != n {
            return bad("images of the nonzero basis elements are dependent".into());
        }
        let expected = betti_x_minus_l(a, self.b1_l, !self.l_class.is_zero())?;
        if expected != n {
            return bad(format!("basis has {n} elements but b2(X \\ L) = {expected}"));
        }
        for g in &self.g_generators {
            if self.tau.mul_vec(g) != *g {
                return Err(HomologyError::GeneratorNotInvariant(g.to_string()));
            }
        }
        let kernel: Vec<BitVec> = (0..n)
            .filter(|&i| self.images[i].is_zero())
            .map(|i| BitVec::unit(n, i))
            .collect();
        let g_rank = rank_of(&self.g_generators);
        let mut with_kernel = self.g_generators.clone();
        with_kernel.extend(kernel);
        if rank_of(&with_kernel) != g_rank {
            return bad("G does not contain the kernel".into());
        }
        Ok(())
    }
}

/// `b_2(X \ L) = b_2(X) + b_1(L) + b_1(X \ L) - 1` with `b_1(X \ L) = 0` when
/// `[L] != 0` and `1` otherwise.
pub fn betti_x_minus_l(b2_x: usize, b1_l: usize, l_class_nonzero: bool) -> Result<usize, HomologyError> {
    let total = b2_x + b1_l + usize::from(!l_class_nonzero);
    total
        .checked_sub(1)
        .ok_or_else(|| HomologyError::Consistency("b2(X \\ L) would be negative".into()))
}

/// Basis of the subspace fixed by the involution.
pub fn invariant_subspace(model: &RealHomologyModel) -> Vec<BitVec> {
    let n = model.dimension();
    model.tau.add(&GF2Matrix::identity(n)).nullspace()
}

/// Dimension of the invariant subspace modulo `G`.
pub fn quotient_dimension(model: &RealHomologyModel) -> Result<usize, HomologyError> {
    for g in &model.g_generators {
        if model.tau.mul_vec(g) != *g {
            return Err(HomologyError::GeneratorNotInvariant(g.to_string()));
        }
    }
    Ok(invariant_subspace(model).len() - rank_of(&model.g_generators))
}

/// Whether the claimed basis is invariant, independent modulo `G`, and of
/// the right size.
pub fn verify_claimed_basis(model: &RealHomologyModel) -> Result<bool, HomologyError> {
    let dim = quotient_dimension(model)?;
    if model.claimed_basis.len() != dim {
        return Ok(false);
    }
    if model.claimed_basis.iter().any(|v| model.tau.mul_vec(v) != *v) {
        return Ok(false);
    }
    let g_rank = rank_of(&model.g_generators);
    let mut all = model.g_generators.clone();
    all.extend(model.claimed_basis.iter().cloned());
    Ok(rank_of(&all) == g_rank + dim)
}
