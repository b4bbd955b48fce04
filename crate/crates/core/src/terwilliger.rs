//! The hypercube `H(D,2)`, the halved cube on even-weight vertices, the
//! `U(sl2)`-action through adjacency and dual adjacency, and the module
//! decompositions of the standard module.
//!
//! Vertices are `usize` bitmasks; the canonical order is integer order and
//! a bitstring is written most significant bit first.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::binomial;
use num_traits::ToPrimitive;

use crate::linalg::{eigenspace, int, kernel_basis, rat, span_closure, EchelonBasis, SparseMatrix, SparseVec};
use crate::report::Report;
use crate::repr::{classify_ue_irreducible, ReprError, Sl2Rep, UeLabel};

/// Largest supported `D`; vertices must fit in a `usize` index.
pub const MAX_DIAMETER: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CubeError {
    #[error("D = {0} is outside 2..={MAX_DIAMETER}")]
    Diameter(usize),
    #[error("base vertex {vertex} is not a vertex of H({d},2)")]
    NotAVertex { vertex: usize, d: usize },
    #[error("base vertex {0} has odd weight")]
    OddBaseVertex(String),
    #[error("bitstring {0:?} is not a string of 0 and 1 of length D")]
    BadBitstring(String),
    #[error(transparent)]
    Repr(#[from] ReprError),
}

/// `H(D,2)` with a base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeContext {
    d: usize,
    base: usize,
}

impl CubeContext {
    pub fn new(d: usize, base: usize) -> Result<Self, CubeError> {
        if !(2..=MAX_DIAMETER).contains(&d) {
            return Err(CubeError::Diameter(d));
        }
        if base >> d != 0 {
            return Err(CubeError::NotAVertex { vertex: base, d });
        }
        Ok(CubeContext { d, base })
    }

    /// Base vertex all zeros.
    pub fn standard(d: usize) -> Result<Self, CubeError> {
        Self::new(d, 0)
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.d
    }

    pub fn distance(&self, x: usize, y: usize) -> usize {
        (x ^ y).count_ones() as usize
    }

    pub fn render(&self, vertex: usize) -> String {
        render_bitstring(self.d, vertex)
    }
}

pub fn render_bitstring(d: usize, vertex: usize) -> String {
    (0..d).rev().map(|i| if vertex >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Reads a bitstring of length `d`, most significant bit first.
pub fn parse_bitstring(d: usize, s: &str) -> Result<usize, CubeError> {
    if s.len() != d || d > MAX_DIAMETER {
        return Err(CubeError::BadBitstring(s.into()));
    }
    s.chars().try_fold(0usize, |acc, c| match c {
        '0' => Ok(acc << 1),
        '1' => Ok(acc << 1 | 1),
        _ => Err(CubeError::BadBitstring(s.into())),
    })
}

/// The halved cube on even-weight vertices, base vertex of even weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalvedContext {
    parent: CubeContext,
    vertices: Vec<usize>,
}

impl HalvedContext {
    pub fn new(parent: CubeContext) -> Result<Self, CubeError> {
        if parent.base.count_ones() % 2 == 1 {
            return Err(CubeError::OddBaseVertex(parent.render(parent.base)));
        }
        let vertices = (0..parent.vertex_count()).filter(|v| v.count_ones() % 2 == 0).collect();
        Ok(HalvedContext { parent, vertices })
    }

    pub fn standard(d: usize) -> Result<Self, CubeError> {
        Self::new(CubeContext::standard(d)?)
    }

    pub fn parent(&self) -> &CubeContext {
        &self.parent
    }

    /// Even-weight vertices in canonical order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
}

pub fn adjacency(ctx: &CubeContext) -> SparseMatrix {
    let n = ctx.vertex_count();
    SparseMatrix::from_triplets(n, n, (0..n).flat_map(|x| (0..ctx.d).map(move |i| (x, x ^ (1 << i), int(1)))))
}

pub fn dual_adjacency(ctx: &CubeContext) -> SparseMatrix {
    let d = ctx.d as i64;
    let entries: Vec<_> = (0..ctx.vertex_count()).map(|y| int(d - 2 * ctx.distance(ctx.base, y) as i64)).collect();
    SparseMatrix::diagonal(&entries)
}

/// `E = A/2 - [A,A*]/4`, `F = A/2 + [A,A*]/4`, `H = A*`.
pub fn cube_rho(ctx: &CubeContext) -> Sl2Rep {
    let a = adjacency(ctx);
    let a_star = dual_adjacency(ctx);
    let half_a = a.scale(&rat(1, 2));
    let quarter_comm = a.commutator(&a_star).scale(&rat(1, 4));
    Sl2Rep::new(&half_a - &quarter_comm, &half_a + &quarter_comm, a_star).expect("cube operators satisfy the sl2 relations")
}

/// `(D - 2k + 1)/(D - k + 1) * C(D,k)`.
pub fn standard_multiplicity(d: usize, k: usize) -> usize {
    if 2 * k > d {
        return 0;
    }
    binomial(d, k) * (d - 2 * k + 1) / (d - k + 1)
}

/// `C(floor(D/2) + 3, 3) + C(ceil(D/2) + 1, 3)`.
pub fn te_dimension_formula(d: usize) -> usize {
    binomial(d / 2 + 3, 3) + binomial(d.div_ceil(2) + 1, 3)
}

/// Model module for the summand indexed by `k` in the halved decomposition.
/// For odd `k = D/2` this is `L_0^(1)`, the zero module, and callers skip it.
pub fn halved_label(d: usize, k: usize) -> UeLabel {
    if k.is_multiple_of(2) {
        UeLabel::even(d - 2 * k)
    } else {
        UeLabel::odd(d - 2 * k)
    }
}

/// Highest-weight count of `L_n` summands, `n = D, D-2, ...`, with the
/// formula check, the dimension count, and the Casimir scalar on each
/// space of highest-weight vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardDecomposition {
    /// `(n, multiplicity)` in decreasing `n`.
    pub summands: Vec<(usize, usize)>,
    pub report: Report,
}

pub fn decompose_standard(ctx: &CubeContext) -> StandardDecomposition {
    let d = ctx.d;
    let rep = cube_rho(ctx);
    let lam = rep.to_ue().lambda().clone();
    let mut report = Report::new(format!("cube-standard D={d}"));
    let mut summands = Vec::new();
    let mut total = 0usize;
    for k in 0..=d / 2 {
        let n = d - 2 * k;
        let weight_space = eigenspace(rep.h(), &int(n as i64)).expect("square");
        let images: Vec<SparseVec> = weight_space.iter().map(|v| rep.e().mul_vec(v)).collect();
        let coefficients = kernel_basis(&SparseMatrix::from_columns(ctx.vertex_count(), &images));
        let highest: Vec<SparseVec> = coefficients
            .iter()
            .map(|c| c.iter().fold(SparseVec::zeros(ctx.vertex_count()), |acc, (j, x)| acc.axpy(x, &weight_space[j])))
            .collect();
        let mult = highest.len();
        let nn = n as i64;
        let scalar = rat(nn * (nn + 2), 2);
        let casimir_ok = highest.iter().all(|v| lam.mul_vec(v) == v.scale(&scalar));
        report.check(format!("L_{n} multiplicity {mult} matches formula"), mult == standard_multiplicity(d, k));
        report.check(format!("L_{n} Casimir acts as {scalar}"), casimir_ok);
        total += mult * (n + 1);
        summands.push((n, mult));
    }
    report.check(format!("sum of mult*(n+1) is 2^{d}"), total == ctx.vertex_count());
    StandardDecomposition { summands, report }
}

/// Restrictions to the even-weight coordinate block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalvedOperators {
    pub a2: SparseMatrix,
    pub a_star: SparseMatrix,
    pub adjacency: SparseMatrix,
}

pub fn halved_operators(hctx: &HalvedContext) -> HalvedOperators {
    let parent = &hctx.parent;
    let a = adjacency(parent);
    let a2 = (&a * &a).submatrix(&hctx.vertices, &hctx.vertices);
    let a_star = dual_adjacency(parent).submatrix(&hctx.vertices, &hctx.vertices);
    let n = hctx.vertices.len();
    let adj = (&a2 - &SparseMatrix::scalar(n, &int(parent.d as i64))).scale(&rat(1, 2));
    for (i, x) in hctx.vertices.iter().enumerate() {
        for (j, y) in hctx.vertices.iter().enumerate() {
            let expected = if parent.distance(*x, *y) == 2 { int(1) } else { int(0) };
            assert_eq!(adj.get(i, j), expected, "halved adjacency entry ({i},{j})");
        }
    }
    HalvedOperators { a2, a_star, adjacency: adj }
}

/// Dimension of the algebra generated by `A^2` and `A*` on the even block.
pub fn te_dimension(hctx: &HalvedContext) -> usize {
    let ops = halved_operators(hctx);
    span_closure(&[ops.a2, ops.a_star]).expect("square").dimension()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalvedDecomposition {
    /// `(label, multiplicity)` in decreasing `n`.
    pub summands: Vec<(UeLabel, usize)>,
    /// Sum of squared dimensions over distinct summands.
    pub wedderburn_dimension: usize,
    pub report: Report,
}

/// Decomposes the even-subalgebra module on the even-weight block.
///
/// For each `H`-eigenvalue `θ`, the vectors of weight `θ` killed by `E^2`
/// are split by the eigenvalue of `Λ`; each basis vector `w` of such a
/// piece spans a summand `w, F^2 w, ...`, which is classified. The summands
/// together must span the block.
pub fn decompose_halved(hctx: &HalvedContext) -> Result<HalvedDecomposition, CubeError> {
    let parent = &hctx.parent;
    let d = parent.d;
    let rep = cube_rho(parent).to_ue();
    let basis: Vec<SparseVec> = hctx.vertices.iter().map(|&v| SparseVec::unit(parent.vertex_count(), v)).collect();
    let block = rep.restrict(&basis)?;
    let size = block.dim();
    let mut report = Report::new(format!("halved D={d}"));

    let mut counts: BTreeMap<UeLabel, usize> = BTreeMap::new();
    let mut span = EchelonBasis::new(size);
    let mut independent = true;
    let mut classified = true;
    let mut lambda_split = true;
    let spectrum = crate::linalg::rational_spectrum(block.h())
        .map_err(ReprError::from)?
        .ok_or(ReprError::IrrationalSpectrum)?;
    for (theta, _) in &spectrum {
        let weight_space = eigenspace(block.h(), theta).map_err(ReprError::from)?;
        let images: Vec<SparseVec> = weight_space.iter().map(|v| block.e2().mul_vec(v)).collect();
        let top: Vec<SparseVec> = kernel_basis(&SparseMatrix::from_columns(size, &images))
            .iter()
            .map(|c| c.iter().fold(SparseVec::zeros(size), |acc, (j, x)| acc.axpy(x, &weight_space[j])))
            .collect();
        if top.is_empty() {
            continue;
        }
        let lambda_on_top = crate::linalg::restrict_to_subspace(block.lambda(), &top).map_err(ReprError::from)?;
        // E^2 w = 0 leaves two possible values of Λ on w.
        let half = rat(1, 2);
        let mut lambda_values = alloc::vec![
            &(theta * &(theta + &int(2))) * &half,
            &int(4) + &(&(theta * &(theta + &int(6))) * &half),
        ];
        lambda_values.dedup();
        let mut pieces = Vec::new();
        for lambda in &lambda_values {
            pieces.push(eigenspace(&lambda_on_top, lambda).map_err(ReprError::from)?);
        }
        lambda_split &= pieces.iter().map(Vec::len).sum::<usize>() == top.len();
        for piece in pieces {
            for coords in piece {
                let w = coords.iter().fold(SparseVec::zeros(size), |acc, (j, x)| acc.axpy(x, &top[j]));
                let mut chain = alloc::vec![w];
                loop {
                    let next = block.f2().mul_vec(chain.last().expect("nonempty"));
                    if next.is_zero() || chain.len() > size {
                        break;
                    }
                    chain.push(next);
                }
                for v in &chain {
                    independent &= span.insert(v.clone());
                }
                match block.restrict(&chain).and_then(|summand| classify_ue_irreducible(&summand)) {
                    Ok(c) => *counts.entry(c.label).or_default() += 1,
                    Err(_) => classified = false,
                }
            }
        }
    }
    report.check("Casimir diagonalizes on each top weight space", lambda_split);
    report.check("every summand classified", classified);
    report.check("summands independent", independent);
    report.check(format!("summands span C^X_e (dim {size})"), span.rank() == size);

    let mut summands: Vec<(UeLabel, usize)> = counts.into_iter().collect();
    summands.sort_by(|a, b| b.0.n.cmp(&a.0.n).then(a.0.family.cmp(&b.0.family)));
    let mut expected: Vec<(UeLabel, usize)> = (0..=d / 2)
        .filter(|&k| !(k % 2 == 1 && 2 * k == d))
        .map(|k| (halved_label(d, k), standard_multiplicity(d, k)))
        .collect();
    expected.sort_by(|a, b| b.0.n.cmp(&a.0.n).then(a.0.family.cmp(&b.0.family)));
    report.check("multiplicities match formula", summands == expected);
    let total: usize = summands.iter().map(|(l, m)| l.dim() * m).sum();
    report.check(format!("sum of mult*dim is 2^{}", d - 1), total == size);
    let wedderburn_dimension = summands.iter().map(|(l, _)| l.dim() * l.dim()).sum();
    report.check(
        format!("sum of squared dims is {}", te_dimension_formula(d)),
        wedderburn_dimension == te_dimension_formula(d),
    );
    Ok(HalvedDecomposition { summands, wedderburn_dimension, report })
}

/// Per-`D` summary of all hypercube checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeSummary {
    pub d: usize,
    pub base_vertex: String,
    pub standard: Vec<(usize, usize)>,
    pub halved: Vec<(UeLabel, usize)>,
    /// `None` when the closure was skipped.
    pub te_dimension: Option<usize>,
    pub formula_value: usize,
    pub report: Report,
}

impl CubeSummary {
    pub fn matches(&self) -> bool {
        self.report.all_passed()
    }
}

/// Runs the standard and halved decompositions, and the closure dimension
/// when `with_closure` is set.
pub fn verify_cube(d: usize, base: usize, with_closure: bool) -> Result<CubeSummary, CubeError> {
    let ctx = CubeContext::new(d, base)?;
    let hctx = HalvedContext::new(ctx.clone())?;
    let mut report = Report::new(format!("cube D={d}"));

    let rep = cube_rho(&ctx);
    report.check("E+F=A", (rep.e() + rep.f()) == adjacency(&ctx));
    let even_block: Vec<usize> = (0..ctx.vertex_count()).filter(|&y| ctx.distance(base, y) % 2 == 0).collect();
    let class_block: Vec<usize> = (0..ctx.vertex_count())
        .filter(|&y| {
            let theta = rep.h().get(y, y).to_integer().to_i64().expect("small");
            (theta - d as i64).rem_euclid(4) == 0
        })
        .collect();
    report.check("A* classes mod 4 are the weight parity classes", even_block == class_block && even_block == hctx.vertices);

    let standard = decompose_standard(&ctx);
    report.extend(standard.report);
    let halved = decompose_halved(&hctx)?;
    report.extend(halved.report);
    let formula_value = te_dimension_formula(d);
    let te = with_closure.then(|| te_dimension(&hctx));
    if let Some(te) = te {
        report.check(format!("te_dimension {te} equals formula {formula_value}"), te == formula_value);
        report.check("te_dimension equals sum of squared dims", te == halved.wedderburn_dimension);
    }
    Ok(CubeSummary {
        d,
        base_vertex: ctx.render(base),
        standard: standard.summands,
        halved: halved.summands,
        te_dimension: te,
        formula_value,
        report,
    })
}
