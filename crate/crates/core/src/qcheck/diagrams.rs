use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{fmt_scalar, Matrix, Scalar};
use crate::partition::Partition;

use super::CheckOutcome;

/// Largest `N^(k+l)` for which `tpi_matrix` will enumerate index pairs.
pub const TPI_ENTRY_BUDGET: usize = 1 << 22;

fn digits(mut x: usize, n: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = x % n;
        x /= n;
    }
    out
}

/// `T_p` for `p` with k upper and l lower points: the N^l × N^k 0/1 matrix
/// with a one at (J, I) when the indices (I, J) are constant on blocks.
pub fn tpi_matrix(p: &Partition, n: usize) -> Result<Matrix<i64>> {
    let (k, l) = (p.upper_count(), p.lower_count());
    let required = n.checked_pow((k + l) as u32).unwrap_or(usize::MAX);
    if n == 0 || required > TPI_ENTRY_BUDGET {
        return Err(Error::Budget {
            required,
            budget: TPI_ENTRY_BUDGET,
        });
    }
    let labels = p.labels();
    let mut out = Matrix::zeros(n.pow(l as u32), n.pow(k as u32));
    let mut value = vec![usize::MAX; p.block_count()];
    for col in 0..n.pow(k as u32) {
        let upper = digits(col, n, k);
        value.iter_mut().for_each(|v| *v = usize::MAX);
        let consistent = upper.iter().zip(&labels[..k]).all(|(&i, &b)| {
            let ok = value[b] == usize::MAX || value[b] == i;
            value[b] = i;
            ok
        });
        if !consistent {
            continue;
        }
        // Lower blocks not touching the upper row range freely.
        let free: Vec<usize> = {
            let mut f: Vec<usize> = labels[k..]
                .iter()
                .copied()
                .filter(|&b| value[b] == usize::MAX)
                .collect();
            f.sort_unstable();
            f.dedup();
            f
        };
        for choice in 0..n.pow(free.len() as u32) {
            let mut v = value.clone();
            for (b, d) in free.iter().zip(digits(choice, n, free.len())) {
                v[*b] = d;
            }
            let row = labels[k..].iter().fold(0, |acc, &b| acc * n + v[b]);
            out.set(row, col, 1);
        }
    }
    Ok(out)
}

/// Exact test of `T_p U^{⊗k} = U^{⊗l} T_p`.
pub fn intertwines(p: &Partition, u: &Matrix<Scalar>) -> Result<CheckOutcome> {
    if !u.is_square() {
        return Err(Error::Dimension(format!(
            "{}x{} is not square",
            u.rows(),
            u.cols()
        )));
    }
    let t = Matrix::from_integer_matrix(&tpi_matrix(p, u.rows())?);
    let lhs = t.try_mul(&u.kron_power(p.upper_count()))?;
    let rhs = u.kron_power(p.lower_count()).try_mul(&t)?;
    for r in 0..lhs.rows() {
        for c in 0..lhs.cols() {
            let d = lhs.get(r, c) - rhs.get(r, c);
            if !d.is_zero() {
                return Ok(CheckOutcome::Violation {
                    identity: format!("(T U^k - U^l T)[{r},{c}] = {}", fmt_scalar(&d)),
                });
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

/// `q ∘ p`: `p` on top, `q` below, middle points identified. Returns the
/// partition on the outer points and the number of closed middle loops.
pub fn partition_compose(p: &Partition, q: &Partition) -> Result<(Partition, usize)> {
    let (k, l, m) = (p.upper_count(), p.lower_count(), q.lower_count());
    if l != q.upper_count() {
        return Err(Error::LegMismatch {
            lower: l,
            upper: q.upper_count(),
        });
    }
    // Nodes: 0..k top, k..k+l middle, k+l..k+l+m bottom.
    let mut parent: Vec<usize> = (0..k + l + m).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut x = x;
        while parent[x] != r {
            let next = parent[x];
            parent[x] = r;
            x = next;
        }
        r
    }
    let join = |parent: &mut Vec<usize>, nodes: Vec<usize>| {
        for w in nodes.windows(2) {
            let (a, b) = (find(parent, w[0]), find(parent, w[1]));
            parent[a] = b;
        }
    };
    for block in p.blocks() {
        join(&mut parent, block.iter().map(|&x| x - 1).collect());
    }
    for block in q.blocks() {
        join(&mut parent, block.iter().map(|&x| x - 1 + k).collect());
    }
    let roots: Vec<usize> = (0..k + l + m).map(|x| find(&mut parent, x)).collect();
    let outer: Vec<usize> = roots[..k].iter().chain(&roots[k + l..]).copied().collect();
    let mut middle_only: Vec<usize> = roots[k..k + l]
        .iter()
        .copied()
        .filter(|r| !outer.contains(r))
        .collect();
    middle_only.sort_unstable();
    middle_only.dedup();
    Ok((Partition::from_labels(k, m, &outer)?, middle_only.len()))
}

pub fn cup() -> Partition {
    Partition::new(0, 2, &[vec![1, 2]]).expect("valid cup")
}

pub fn cap() -> Partition {
    Partition::new(2, 0, &[vec![1, 2]]).expect("valid cap")
}

/// The 3 → 3 diagram acting as `e_{ijk} ↦ δ_{ik} e_{ijk}`.
pub fn vanishing_diagram() -> Partition {
    Partition::new(3, 3, &[vec![1, 3, 4, 6], vec![2, 5]]).expect("valid diagram")
}

/// Moves the last upper point around the right to the end of the lower row
/// and the first lower point around the left to the front of the upper row.
pub fn rotate_partition(p: &Partition) -> Result<Partition> {
    let (k, l) = (p.upper_count(), p.lower_count());
    if k == 0 || l == 0 {
        return Err(Error::Precondition(
            "rotation needs a point on each row".into(),
        ));
    }
    let up = p.upper_labels();
    let low = p.lower_labels();
    let upper: Vec<usize> = std::iter::once(low[0])
        .chain(up[..k - 1].iter().copied())
        .collect();
    let lower: Vec<usize> = low[1..]
        .iter()
        .copied()
        .chain(std::iter::once(up[k - 1]))
        .collect();
    Ok(Partition::kernel(&upper, &lower))
}

/// The same rotation built from `T_p` by bending legs:
/// `(T_cap ⊗ 1)(1_N ⊗ [(T_p ⊗ 1_N)(1 ⊗ T_cup)])`.
pub fn leg_bent_matrix(p: &Partition, n: usize) -> Result<Matrix<i64>> {
    let (k, l) = (p.upper_count(), p.lower_count());
    if k == 0 || l == 0 {
        return Err(Error::Precondition(
            "rotation needs a point on each row".into(),
        ));
    }
    let id = |e: usize| Matrix::<i64>::identity(n.pow(e as u32));
    let inner = tpi_matrix(p, n)?
        .kron(&id(1))
        .try_mul(&id(k - 1).kron(&tpi_matrix(&cup(), n)?))?;
    tpi_matrix(&cap(), n)?
        .kron(&id(l))
        .try_mul(&id(1).kron(&inner))
}
