use super::{Ideal, Variety};
use crate::error::{Error, Result};
use crate::poly::{same_ctx, GaussianRational, Polynomial};

/// `l × m` matrix of partial derivatives `∂f_i/∂x_j`.
pub fn jacobian_matrix(fs: &[Polynomial]) -> Result<Vec<Vec<Polynomial>>> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let ctx = first.ctx().clone();
    fs.iter()
        .map(|f| {
            if !same_ctx(f.ctx(), &ctx) {
                return Err(Error::ContextMismatch);
            }
            (0..ctx.arity()).map(|j| f.partial_derivative(j)).collect()
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant by Laplace expansion along the first selected row.
fn det(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
    let ctx = m[rows[0]][cols[0]].ctx().clone();
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut acc = Polynomial::zero(&ctx);
    let sub_rows = &rows[1..];
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[rows[0]][c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &det(m, sub_rows, &sub_cols);
        acc = if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// All nonzero `size × size` minors of a polynomial matrix. A `0 × 0`
/// minor is `1`.
pub fn minors(matrix: &[Vec<Polynomial>], size: usize) -> Vec<Polynomial> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if size == 0 {
        return match matrix.first().and_then(|r| r.first()) {
            Some(p) => vec![Polynomial::one(p.ctx())],
            None => Vec::new(),
        };
    }
    if size > rows || size > cols {
        return Vec::new();
    }
    let mut out = Vec::new();
    for r in combinations(rows, size) {
        for c in combinations(cols, size) {
            let d = det(matrix, &r, &c);
            if !d.is_zero() && !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

/// Ideal of the singular locus by the Jacobian criterion: the generators of
/// `X` plus every `c × c` minor of their Jacobian, `c = m − k`.
///
/// Correct for radical, equidimensional input ideals (not certified).
pub fn singular_locus(x: &Variety) -> Result<Ideal> {
    let k = x.k()?;
    let ctx = x.ctx();
    let codim = x.ambient_dim - k;
    if codim == 0 {
        // X is all of ℂᵐ
        return Ok(Ideal::unit(ctx));
    }
    let gens: Vec<Polynomial> = x.ideal.nonzero_generators().cloned().collect();
    let jac = jacobian_matrix(&gens)?;
    let mut all = gens.clone();
    all.extend(minors(&jac, codim));
    Ideal::new(ctx, all)
}

/// Maximal minors of `Jac(F) · W` for the column vectors `w` (exact entries).
pub fn critical_minors(fs: &[Polynomial], w: &[Vec<GaussianRational>]) -> Result<Vec<Polynomial>> {
    let jac = jacobian_matrix(fs)?;
    let Some(ctx) = fs.first().map(|f| f.ctx().clone()) else {
        return Ok(Vec::new());
    };
    let product: Vec<Vec<Polynomial>> = jac
        .iter()
        .map(|row| {
            w.iter()
                .map(|col| {
                    row.iter()
                        .zip(col)
                        .fold(Polynomial::zero(&ctx), |acc, (p, c)| &acc + &p.scale(c))
                })
                .collect()
        })
        .collect();
    Ok(minors(&product, w.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{dimension, Budget};
    use crate::poly::{parse_polynomial, VariableContext};

    #[test]
    fn jacobian_examples() {
        let c = VariableContext::new(&["x", "y"]).unwrap();
        let cusp = parse_polynomial("y^2 - x^3", &c).unwrap();
        let j = jacobian_matrix(&[cusp]).unwrap();
        assert_eq!(j[0][0], parse_polynomial("-3*x^2", &c).unwrap());
        assert_eq!(j[0][1], parse_polynomial("2*y", &c).unwrap());

        let id = jacobian_matrix(&[Polynomial::var(&c, 0), Polynomial::var(&c, 1)]).unwrap();
        assert_eq!(id[0][0], Polynomial::one(&c));
        assert!(id[0][1].is_zero() && id[1][0].is_zero());

        let c3 = VariableContext::new(&["x", "y", "z"]).unwrap();
        let tw = [
            parse_polynomial("y - x^2", &c3).unwrap(),
            parse_polynomial("z - x^3", &c3).unwrap(),
        ];
        let j = jacobian_matrix(&tw).unwrap();
        let expect = [["-2*x", "1", "0"], ["-3*x^2", "0", "1"]];
        for (r, row) in expect.iter().enumerate() {
            for (k, e) in row.iter().enumerate() {
                assert_eq!(j[r][k], parse_polynomial(e, &c3).unwrap());
            }
        }
    }

    #[test]
    fn singular_loci() {
        let b = Budget::default();
        let cusp = Variety::parse(&["x", "y"], &["y^2 - x^3"], &b).unwrap();
        let s = singular_locus(&cusp).unwrap();
        assert_eq!(dimension(&s, &b).unwrap(), 0);
        let origin = Ideal::parse(cusp.ctx(), &["x", "y"]).unwrap();
        assert!(s.same_variety(&origin, &b).unwrap());

        let parabola = Variety::parse(&["x", "y"], &["y - x^2"], &b).unwrap();
        assert!(singular_locus(&parabola).unwrap().is_unit(&b).unwrap());
        let line = Variety::parse(&["x", "y"], &["y"], &b).unwrap();
        assert!(singular_locus(&line).unwrap().is_unit(&b).unwrap());
    }

    #[test]
    fn three_by_three_determinant() {
        let c = VariableContext::new(&["x"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &c).unwrap();
        let m = vec![
            vec![p("2"), p("0"), p("1")],
            vec![p("1"), p("3"), p("2")],
            vec![p("1"), p("1"), p("x")],
        ];
        // 2(3x - 2) - 0 + 1(1 - 3) = 6x - 6
        assert_eq!(minors(&m, 3), vec![p("6*x - 6")]);
    }
}
