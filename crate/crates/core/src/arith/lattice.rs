//! Integer row lattices in Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-echelon Hermite basis of the lattice spanned by some generators,
/// with the unimodular combination that produced each basis row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hermite {
    /// Upper-echelon rows: positive pivots, entries above each pivot
    /// reduced into `[0, pivot)`.
    pub basis: Vec<Vec<BigInt>>,
    /// `basis[i] = Σ_j transform[i][j] · generators[j]`.
    pub transform: Vec<Vec<BigInt>>,
}

fn axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= q * s;
    }
}

pub fn hermite(generators: &[Vec<BigInt>]) -> Hermite {
    let k = generators.len();
    let n = generators.first().map_or(0, Vec::len);
    let mut w: Vec<Vec<BigInt>> = generators.to_vec();
    let mut t: Vec<Vec<BigInt>> =
        (0..k).map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();

    let mut pr = 0;
    for col in 0..n {
        if pr == k {
            break;
        }
        loop {
            let best = (pr..k).filter(|&r| !w[r][col].is_zero()).min_by(|&a, &b| w[a][col].abs().cmp(&w[b][col].abs()));
            let Some(best) = best else { break };
            w.swap(pr, best);
            t.swap(pr, best);
            let mut done = true;
            for r in pr + 1..k {
                if w[r][col].is_zero() {
                    continue;
                }
                let q = w[r][col].div_floor(&w[pr][col]);
                let (head, tail) = w.split_at_mut(r);
                axpy(&mut tail[0], &q, &head[pr]);
                let (th, tt) = t.split_at_mut(r);
                axpy(&mut tt[0], &q, &th[pr]);
                if !w[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if w[pr][col].is_zero() {
            continue;
        }
        if w[pr][col].is_negative() {
            w[pr].iter_mut().for_each(|x| *x = -&*x);
            t[pr].iter_mut().for_each(|x| *x = -&*x);
        }
        for r in 0..pr {
            let q = w[r][col].div_floor(&w[pr][col]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = w.split_at_mut(pr);
            axpy(&mut head[r], &q, &tail[0]);
            let (th, tt) = t.split_at_mut(pr);
            axpy(&mut th[r], &q, &tt[0]);
        }
        pr += 1;
    }
    w.truncate(pr);
    t.truncate(pr);
    Hermite { basis: w, transform: t }
}

/// Coordinates of `v` in an echelon basis, if `v` lies in the lattice.
pub fn coordinates(basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for row in basis {
        let col = row.iter().position(|x| !x.is_zero())?;
        if rest[..col].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let (q, r) = rest[col].div_rem(&row[col]);
        if !r.is_zero() {
            return None;
        }
        axpy(&mut rest, &q, row);
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}

/// Basis of `{v ∈ Zᵏ : v·M ≡ 0 (mod modulus)}` for a `k × l` matrix `M`.
pub fn kernel_mod(m: &[Vec<BigInt>], modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let k = m.len();
    let l = m.first().map_or(0, Vec::len);
    let mut gens = Vec::with_capacity(k + l);
    for (i, row) in m.iter().enumerate() {
        let mut g = row.clone();
        g.extend((0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
        gens.push(g);
    }
    for j in 0..l {
        let mut g: Vec<BigInt> = (0..l).map(|c| if c == j { modulus.clone() } else { BigInt::zero() }).collect();
        g.extend(std::iter::repeat_n(BigInt::zero(), k));
        gens.push(g);
    }
    hermite(&gens)
        .basis
        .into_iter()
        .filter(|row| row[..l].iter().all(Zero::is_zero))
        .map(|row| row[l..].to_vec())
        .collect()
}
