#![allow(clippy::needless_range_loop)]

//! Independent reference computations used to cross-check the library.
//!
//! Everything here works on plain nested `Vec`s and shares no linear algebra
//! with the crate: its own elimination, its own matrix products and inverse,
//! and cochain evaluation by full multilinear expansion instead of minors.

#![allow(dead_code)]

use bihom::{
    commutator_bihom_lie, examples, yau_twist, BihomLieAlgebra, Representation, Scalar,
};
use num_traits::{One, Signed, Zero};

pub type Q = Scalar;
pub type Mat = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn qr(p: i64, d: i64) -> Q {
    Q::new(p.into(), d.into())
}

pub fn la() -> BihomLieAlgebra {
    commutator_bihom_lie(&examples::assoc2d(&q(2), &q(3)).unwrap()).unwrap()
}

pub fn sl_twisted(k: i64, l: i64) -> BihomLieAlgebra {
    let base = examples::sl2_twist(&q(k), &q(l)).unwrap();
    yau_twist(base.bracket_tensor(), base.alpha(), base.beta()).unwrap()
}

pub fn sl() -> BihomLieAlgebra {
    sl_twisted(1, 2)
}

pub fn goldens() -> Vec<(&'static str, BihomLieAlgebra)> {
    vec![("L(A)", la()), ("sl2 twist", sl())]
}

/// Raw data pulled out of a library algebra.
pub struct Raw {
    pub n: usize,
    pub c: Vec<Vec<Vec<Q>>>,
    pub alpha: Mat,
    pub beta: Mat,
}

impl Raw {
    pub fn of(l: &BihomLieAlgebra) -> Raw {
        let n = l.dim();
        Raw {
            n,
            c: (0..n)
                .map(|i| (0..n).map(|j| l.basis_bracket(i, j).to_vec()).collect())
                .collect(),
            alpha: l.alpha().to_rows(),
            beta: l.beta().to_rows(),
        }
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.n];
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for k in 0..self.n {
                    out[k] += &s * &self.c[i][j][k];
                }
            }
        }
        out
    }
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |acc, p| acc + &row[p] * &b[p][j]))
                .collect()
        })
        .collect()
}

pub fn apply(a: &Mat, v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

pub fn col(a: &Mat, j: usize) -> Vec<Q> {
    a.iter().map(|r| r[j].clone()).collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| col(a, j)).collect()
}

/// Gauss-Jordan on `[a | I]`, choosing the pivot of largest absolute value.
pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut aug: Mat = a
        .iter()
        .zip(identity(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    for c in 0..n {
        let p = (c..n)
            .filter(|&r| !aug[r][c].is_zero())
            .max_by(|&x, &y| aug[x][c].abs().cmp(&aug[y][c].abs()))?;
        aug.swap(c, p);
        let piv = aug[c][c].clone();
        for x in aug[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != c && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                for k in 0..2 * n {
                    let t = &f * &aug[c][k];
                    aug[r][k] -= t;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn power(a: &Mat, e: i64) -> Mat {
    let base = if e < 0 { inverse(a).expect("invertible") } else { a.clone() };
    (0..e.unsigned_abs()).fold(identity(a.len()), |acc, _| matmul(&acc, &base))
}

pub fn twist(raw: &Raw, k: i64, l: i64) -> Mat {
    matmul(&power(&raw.alpha, k), &power(&raw.beta, l))
}

/// Rank by forward elimination (row echelon only, no back substitution).
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Mat = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in (0..cols).rev() {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for k in 0..cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of `{v : rows · v = 0}` from a reduced echelon form built here.
pub fn nullspace(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m: Mat = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &piv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Q::zero(); cols];
            v[free] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}

pub fn same_span(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let ra = rank(a);
    let rb = rank(b);
    let both: Vec<Vec<Q>> = a.iter().chain(b).cloned().collect();
    ra == rb && rank(&both) == ra
}

pub fn contained(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let both: Vec<Vec<Q>> = a.iter().chain(b).cloned().collect();
    rank(&both) == rank(b)
}

/// Dense constraint rows for `α^k β^l`-derivations, unknown `D[r][c]` at
/// index `c·n + r`.
pub fn derivation_rows(raw: &Raw, k: i64, l: i64) -> Mat {
    let n = raw.n;
    let t = twist(raw, k, l);
    let var = |r: usize, c: usize| c * n + r;
    let mut rows = Vec::new();
    for m in [&raw.alpha, &raw.beta] {
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![Q::zero(); n * n];
                for p in 0..n {
                    row[var(r, p)] += &m[p][c];
                    row[var(p, c)] -= &m[r][p];
                }
                rows.push(row);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                let mut row = vec![Q::zero(); n * n];
                for kk in 0..n {
                    row[var(r, kk)] += &raw.c[i][j][kk];
                }
                for p in 0..n {
                    for qq in 0..n {
                        // [D e_i, T e_j]: D e_i has entries D[p][i]
                        row[var(p, i)] -= &t[qq][j] * &raw.c[p][qq][r];
                        // [T e_i, D e_j]
                        row[var(qq, j)] -= &t[p][i] * &raw.c[p][qq][r];
                    }
                }
                rows.push(row);
            }
        }
    }
    rows
}

pub fn derivation_dim(raw: &Raw, k: i64, l: i64) -> usize {
    raw.n * raw.n - rank(&derivation_rows(raw, k, l))
}

/// `D` flattened column-major.
pub fn flat(d: &Mat) -> Vec<Q> {
    let n = d.len();
    (0..n).flat_map(|c| (0..n).map(move |r| (r, c))).map(|(r, c)| d[r][c].clone()).collect()
}

pub fn fixed_points(raw: &Raw) -> Vec<Vec<Q>> {
    let n = raw.n;
    let mut rows = Vec::new();
    for m in [&raw.alpha, &raw.beta] {
        for r in 0..n {
            let mut row = m[r].clone();
            row[r] -= Q::one();
            rows.push(row);
        }
    }
    nullspace(&rows, n)
}

/// `v ↦ -[α^{k-1}β^l v, u]` for each fixed point `u`.
pub fn inner_maps(raw: &Raw, k: i64, l: i64) -> Vec<Vec<Q>> {
    let n = raw.n;
    let t = twist(raw, k - 1, l);
    fixed_points(raw)
        .iter()
        .map(|u| {
            let cols: Vec<Vec<Q>> = (0..n)
                .map(|j| raw.bracket(&col(&t, j), u).into_iter().map(|x| -x).collect())
                .collect();
            let d: Mat = (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect();
            flat(&d)
        })
        .collect()
}

/// Module data of a representation.
pub struct RawRep {
    pub m: usize,
    pub rho: Vec<Mat>,
    pub alpha_m: Mat,
    pub beta_m: Mat,
}

impl RawRep {
    pub fn of(rep: &Representation) -> RawRep {
        RawRep {
            m: rep.module_dim(),
            rho: rep.rho().iter().map(|r| r.to_rows()).collect(),
            alpha_m: rep.alpha_m().to_rows(),
            beta_m: rep.beta_m().to_rows(),
        }
    }

    pub fn act(&self, x: &[Q]) -> Mat {
        let mut out = vec![vec![Q::zero(); self.m]; self.m];
        for (c, r) in x.iter().zip(&self.rho) {
            for a in 0..self.m {
                for b in 0..self.m {
                    out[a][b] += c * &r[a][b];
                }
            }
        }
        out
    }
}

fn increasing(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in increasing(n, k - 1) {
        let start = rest.last().map_or(0, |&x| x + 1);
        for i in start..n {
            let mut v = rest.clone();
            v.push(i);
            out.push(v);
        }
    }
    out
}

pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    increasing(n, k)
}

/// Sign of the permutation sorting `idx`, or `None` on a repeated index.
fn sort_sign(idx: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - i - 1 {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// A cochain given by ambient coordinates, evaluated multilinearly.
pub struct Cochain<'a> {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub coords: &'a [Q],
    pub subsets: Vec<Vec<usize>>,
}

impl<'a> Cochain<'a> {
    pub fn new(n: usize, k: usize, m: usize, coords: &'a [Q]) -> Self {
        Cochain {
            n,
            k,
            m,
            coords,
            subsets: increasing(n, k),
        }
    }

    fn on_indices(&self, idx: &[usize]) -> Vec<Q> {
        let Some((sorted, sign)) = sort_sign(idx) else {
            return vec![Q::zero(); self.m];
        };
        let s = self.subsets.iter().position(|x| *x == sorted).expect("subset");
        (0..self.m).map(|b| &self.coords[s * self.m + b] * q(sign)).collect()
    }

    pub fn eval(&self, args: &[Vec<Q>]) -> Vec<Q> {
        assert_eq!(args.len(), self.k);
        let mut out = vec![Q::zero(); self.m];
        let total = self.n.pow(self.k as u32);
        for code in 0..total {
            let mut idx = Vec::with_capacity(self.k);
            let mut c = code;
            let mut coeff = Q::one();
            for a in args {
                let i = c % self.n;
                c /= self.n;
                idx.push(i);
                coeff *= &a[i];
                if coeff.is_zero() {
                    break;
                }
            }
            if coeff.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(self.on_indices(&idx)) {
                *o += &coeff * v;
            }
        }
        out
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()
}

/// Which first sum the coboundary uses.
pub enum Action<'a> {
    /// Trivial module: the first sum vanishes.
    Trivial,
    /// `ad_{s,t}` written directly as `[α^{s+1}β^{t+k-1} u_i, f(..)]`.
    Adjoint(i64, i64),
    /// A general module through `ρ(αβ^{k-1} u_i)`.
    Module(&'a RawRep),
}

/// `d f` on the increasing `(k+1)`-tuples, evaluated formula by formula.
pub fn coboundary_columns(raw: &Raw, m: usize, k: usize, action: &Action) -> Mat {
    let n = raw.n;
    let shift = matmul(&inverse(&raw.alpha).unwrap(), &raw.beta);
    let ambient = increasing(n, k).len() * m;
    let targets = increasing(n, k + 1);
    (0..ambient)
        .map(|basis| {
            let coords: Vec<Q> = unit(ambient, basis);
            let f = Cochain::new(n, k, m, &coords);
            let mut out = Vec::new();
            for t in &targets {
                let u: Vec<Vec<Q>> = t.iter().map(|&i| unit(n, i)).collect();
                let mut total = vec![Q::zero(); m];
                for i in 0..=k {
                    let rest: Vec<Vec<Q>> =
                        u.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, x)| x.clone()).collect();
                    let val = f.eval(&rest);
                    let term = match action {
                        Action::Trivial => vec![Q::zero(); m],
                        Action::Adjoint(s, tt) => {
                            let tw = twist(raw, s + 1, tt + k as i64 - 1);
                            raw.bracket(&apply(&tw, &u[i]), &val)
                        }
                        Action::Module(rep) => {
                            let tw = twist(raw, 1, k as i64 - 1);
                            apply(&rep.act(&apply(&tw, &u[i])), &val)
                        }
                    };
                    // (-1)^(i+1) with 1-based i+1
                    let sign = if i % 2 == 0 { -Q::one() } else { Q::one() };
                    for (o, x) in total.iter_mut().zip(term) {
                        *o += &sign * x;
                    }
                }
                for i in 0..=k {
                    for j in i + 1..=k {
                        let mut args = vec![raw.bracket(&apply(&shift, &u[i]), &u[j])];
                        for (p, x) in u.iter().enumerate() {
                            if p != i && p != j {
                                args.push(apply(&raw.beta, x));
                            }
                        }
                        let val = f.eval(&args);
                        // (-1)^((i+1)+(j+1)+1)
                        let sign = if (i + j + 3) % 2 == 0 { Q::one() } else { -Q::one() };
                        for (o, x) in total.iter_mut().zip(val) {
                            *o += &sign * x;
                        }
                    }
                }
                out.extend(total);
            }
            out
        })
        .collect()
}

/// Rows of the compatibility system `T_M f(u..) = f(T u..)` on increasing tuples.
pub fn compatibility_rows(raw: &Raw, rep: &RawRep, k: usize) -> Mat {
    let n = raw.n;
    let m = rep.m;
    let ambient = increasing(n, k).len() * m;
    let mut columns: Vec<Vec<Q>> = Vec::new();
    for basis in 0..ambient {
        let coords = unit(ambient, basis);
        let f = Cochain::new(n, k, m, &coords);
        let mut out = Vec::new();
        for (t, t_m) in [(&raw.alpha, &rep.alpha_m), (&raw.beta, &rep.beta_m)] {
            for s in increasing(n, k) {
                let u: Vec<Vec<Q>> = s.iter().map(|&i| unit(n, i)).collect();
                let lhs = apply(t_m, &f.eval(&u));
                let moved: Vec<Vec<Q>> = u.iter().map(|x| apply(t, x)).collect();
                let rhs = f.eval(&moved);
                out.extend(lhs.into_iter().zip(rhs).map(|(a, b)| a - b));
            }
        }
        columns.push(out);
    }
    transpose(&columns)
}

pub fn compatible(raw: &Raw, rep: &RawRep, k: usize) -> Vec<Vec<Q>> {
    let ambient = increasing(raw.n, k).len() * rep.m;
    nullspace(&compatibility_rows(raw, rep, k), ambient)
}

pub fn trivial_raw(n: usize) -> RawRep {
    RawRep {
        m: 1,
        rho: vec![vec![vec![Q::zero()]]; n],
        alpha_m: identity(1),
        beta_m: identity(1),
    }
}

/// `ρ(e_i) = [α^s β^t e_i, ·]` assembled from structure constants.
pub fn adjoint_raw(raw: &Raw, s: i64, t: i64) -> RawRep {
    let n = raw.n;
    let tw = twist(raw, s, t);
    let rho = (0..n)
        .map(|i| {
            let x = col(&tw, i);
            let cols: Vec<Vec<Q>> = (0..n).map(|j| raw.bracket(&x, &unit(n, j))).collect();
            (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect()
        })
        .collect();
    RawRep {
        m: n,
        rho,
        alpha_m: raw.alpha.clone(),
        beta_m: raw.beta.clone(),
    }
}
