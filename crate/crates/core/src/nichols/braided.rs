use crate::cyclotomic::CycMatrix;
use crate::error::{Error, Result};

/// A vector space of dimension `d` with a linear map `c` on `V⊗V`, stored as
/// a `d² × d²` matrix in the basis `e_a ⊗ e_b ↦ a·d + b`. Entry `(r, s)` is
/// the coefficient of basis tensor `r` in `c(s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidedSpace {
    dim: usize,
    braid: CycMatrix,
}

impl BraidedSpace {
    pub fn new(braid: CycMatrix) -> Result<Self> {
        let d2 = braid.rows();
        let dim = (d2 as f64).sqrt().round() as usize;
        if braid.cols() != d2 || dim * dim != d2 {
            return Err(Error::DimensionMismatch(format!("braiding must be d²×d², got {}x{}", d2, braid.cols())));
        }
        Ok(BraidedSpace { dim, braid })
    }

    /// The flip `e_a ⊗ e_b ↦ e_b ⊗ e_a`.
    pub fn flip(n: u32, dim: usize) -> Result<Self> {
        let one = crate::cyclotomic::cyc(n, 0)?;
        let e = (0..dim).flat_map(|a| (0..dim).map(move |b| (b * dim + a, a * dim + b)));
        Self::new(CycMatrix::from_triplets(
            n,
            dim * dim,
            dim * dim,
            e.map(|(r, c)| (r, c, one.clone())).collect::<Vec<_>>(),
        )?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> u32 {
        self.braid.n()
    }

    pub fn braid(&self) -> &CycMatrix {
        &self.braid
    }

    /// `(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c)` on `V^{⊗3}`.
    pub fn check_braid_equation(&self) -> bool {
        let id = CycMatrix::identity(self.n(), self.dim).expect("valid conductor");
        let c1 = self.braid.kron(&id);
        let c2 = id.kron(&self.braid);
        let m = |a: &CycMatrix, b: &CycMatrix| a.try_mul(b).expect("shapes");
        m(&m(&c1, &c2), &c1) == m(&m(&c2, &c1), &c2)
    }

    pub fn is_invertible(&self) -> bool {
        self.braid.inverse().is_some()
    }

    /// Conjugates by a change of basis: `new_basis_k = Σ_j p[j][k] e_j`, i.e.
    /// the braiding written in the columns of `p`.
    pub fn change_basis(&self, p: &CycMatrix) -> Result<BraidedSpace> {
        let inv = p.inverse().ok_or_else(|| Error::DimensionMismatch("change of basis is singular".into()))?;
        let pp = p.kron(p);
        let ii = inv.kron(&inv);
        Self::new(ii.try_mul(&self.braid)?.try_mul(&pp)?)
    }
}
