use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use super::array::IntersectionArray;
use crate::coherence::StructureConstants;
use crate::config::Color;
use crate::error::{Error, Result};

type Q = Ratio<i128>;

fn to_count(q: Q, what: &str) -> Result<u64> {
    if !q.is_integer() || q < Q::zero() {
        return Err(Error::InvalidArray(format!("{what} = {q} is not a non-negative integer")));
    }
    q.to_integer().to_u64().ok_or(Error::Overflow("intersection numbers"))
}

/// All `p_{i,j}^t` of the distance scheme, computed exactly from the array
/// with `A_{i+1} A_j = (A (A_i A_j) - a_i A_i A_j - b_{i-1} A_{i-1} A_j) / c_{i+1}`.
pub fn intersection_numbers(array: &IntersectionArray) -> Result<StructureConstants> {
    array.require_valid()?;
    let d = array.diameter();
    let q = |x: u64| Q::from_integer(x as i128);
    let a: Vec<Q> = (0..=d).map(|i| Q::from_integer(array.a(i) as i128)).collect();
    // product of A with sum_t x_t A_t
    let times_a = |x: &[Q]| -> Vec<Q> {
        let mut y = vec![Q::zero(); d + 1];
        for t in 0..=d {
            if x[t].is_zero() {
                continue;
            }
            if t < d {
                y[t + 1] += x[t] * q(array.c(t + 1));
            }
            y[t] += x[t] * a[t];
            if t > 0 {
                y[t - 1] += x[t] * q(array.b(t - 1));
            }
        }
        y
    };
    // prod[i][j] = coefficients of A_i A_j
    let mut prod: Vec<Vec<Vec<Q>>> = Vec::with_capacity(d + 1);
    prod.push(
        (0..=d)
            .map(|j| (0..=d).map(|t| if t == j { Q::from_integer(1) } else { Q::zero() }).collect())
            .collect(),
    );
    for i in 0..d {
        let c_next = q(array.c(i + 1));
        let row: Vec<Vec<Q>> = (0..=d)
            .map(|j| {
                let mut y = times_a(&prod[i][j]);
                for t in 0..=d {
                    y[t] -= a[i] * prod[i][j][t];
                    if i > 0 {
                        y[t] -= q(array.b(i - 1)) * prod[i - 1][j][t];
                    }
                    y[t] /= c_next;
                }
                y
            })
            .collect();
        prod.push(row);
    }
    let mut vals = Vec::new();
    for i in 0..=d {
        for j in 0..=d {
            for t in 0..=d {
                let p = to_count(prod[i][j][t], &format!("p_({i},{j})^{t}"))?;
                if prod[i][j][t] != prod[j][i][t] {
                    return Err(Error::InvalidArray(format!("p_({i},{j})^{t} differs from p_({j},{i})^{t}")));
                }
                vals.push((i as Color, j as Color, t as Color, p));
            }
        }
    }
    let sc = distance_tensor(d, vals)?;
    let ks = array.sphere_sizes().ok_or_else(|| Error::InvalidArray("non-integral sphere sizes".into()))?;
    for i in 0..=d {
        if sc.degree(i as Color) != ks[i] {
            return Err(Error::InvalidArray(format!(
                "p_({i},{i})^0 = {} but k_{i} = {}",
                sc.degree(i as Color),
                ks[i]
            )));
        }
    }
    Ok(sc)
}

fn distance_tensor(d: usize, vals: Vec<(Color, Color, Color, u64)>) -> Result<StructureConstants> {
    let pairing = (0..=d as Color).collect();
    let diagonal = (0..=d).map(|t| t == 0).collect();
    StructureConstants::from_entries(d + 1, pairing, diagonal, vals)
}

/// A distance-regular graph with this array is primitive iff every
/// distance-`i` graph is connected, read off the tensor.
pub fn is_primitive(array: &IntersectionArray) -> Result<bool> {
    let sc = intersection_numbers(array)?;
    Ok((1..=array.diameter() as Color).all(|i| sc.color_distances(i).iter().all(Option::is_some)))
}

/// The closed forms for a diameter-3 array, written in terms of `k`,
/// `lambda`, `mu`, `b2` and `c3`. Entries not covered by the closed forms
/// come from `p_{0,j}^t`, `p_{1,3}^1 = p_{1,1}^3 = 0` and the row sum
/// `sum_j p_{3,j}^3 = k_3`.
pub fn diam3_closed_forms(k: u64, lambda: u64, mu: u64, b2: u64, c3: u64) -> Result<StructureConstants> {
    if mu == 0 {
        return Err(Error::InvalidParameters("mu = 0: a diameter-3 graph needs mu >= 1".into()));
    }
    if c3 == 0 {
        return Err(Error::InvalidParameters("c_3 = 0".into()));
    }
    let z = |x: u64| Q::from_integer(x as i128);
    let (k, l, m, a, b) = (z(k), z(lambda), z(mu), z(b2), z(c3));
    let one = Q::from_integer(1);
    let kl1 = k - l - one;
    let k2 = k * kl1 / m;
    let k3 = k2 * a / b;
    let mut t1 = [[Q::zero(); 4]; 4];
    let mut t2 = [[Q::zero(); 4]; 4];
    let mut t3 = [[Q::zero(); 4]; 4];
    let sym = |t: &mut [[Q; 4]; 4], i: usize, j: usize, v: Q| {
        t[i][j] = v;
        t[j][i] = v;
    };
    sym(&mut t1, 1, 1, l);
    sym(&mut t1, 1, 2, kl1);
    sym(&mut t1, 2, 2, kl1 * (k - a - m) / m);
    sym(&mut t1, 2, 3, a * kl1 / m);
    sym(&mut t1, 3, 3, (k - b) * kl1 * a / (b * m));

    sym(&mut t2, 1, 1, m);
    sym(&mut t2, 1, 2, k - a - m);
    sym(&mut t2, 1, 3, a);
    sym(&mut t2, 2, 2, kl1 + (b * a - k + (k - a - m) * (k - a - m - l)) / m);
    sym(&mut t2, 2, 3, ((k - b) + (k - a - l) - m) * a / m);
    sym(&mut t2, 3, 3, ((k - b) * (k - b) - l * (k - b) - k + a * b) / m * a / b);

    sym(&mut t3, 1, 2, b);
    sym(&mut t3, 1, 3, k - b);
    sym(&mut t3, 2, 2, ((k - b) + (k - a - l) - m) * b / m);
    let p233 = ((k - b) * (k - b) - (k - b) * l - k + a * b) / m;
    sym(&mut t3, 2, 3, p233);
    sym(&mut t3, 3, 3, k3 - one - (k - b) - p233);

    let ks = [one, k, k2, k3];
    let mut vals = Vec::new();
    for t in 0..4usize {
        for i in 0..4usize {
            for j in 0..4usize {
                let v = if t == 0 {
                    if i == j {
                        ks[i]
                    } else {
                        Q::zero()
                    }
                } else if i == 0 || j == 0 {
                    if i + j == t {
                        one
                    } else {
                        Q::zero()
                    }
                } else {
                    [&t1, &t2, &t3][t - 1][i][j]
                };
                let p = to_count(v, &format!("p_({i},{j})^{t}"))?;
                vals.push((i as Color, j as Color, t as Color, p));
            }
        }
    }
    distance_tensor(3, vals)
}

/// [`diam3_closed_forms`] applied to the parameters of a diameter-3 array.
pub fn diam3_closed_forms_for(array: &IntersectionArray) -> Result<StructureConstants> {
    if array.diameter() != 3 {
        return Err(Error::InvalidParameters(format!("array {array} has diameter {}", array.diameter())));
    }
    array.require_valid()?;
    diam3_closed_forms(array.k(), array.lambda() as u64, array.mu(), array.b(2), array.c(3))
}
