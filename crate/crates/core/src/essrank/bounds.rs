use crate::combin::binomial_i;
use crate::error::{Error, Result};

fn check_r(n: usize, r: usize) -> Result<()> {
    if r < 1 || r > n {
        Err(Error::domain(format!("distance {r} outside 1..={n}")))
    } else {
        Ok(())
    }
}

/// Upper bound `C(n+d-1, d) - C(r+d-2, d)` on the dimension of a code with
/// minimum essential rank `r`.
pub fn singleton_like_bound(n: usize, d: usize, r: usize) -> Result<u128> {
    check_r(n, r)?;
    let (n, d, r) = (n as i64, d as i64, r as i64);
    Ok(binomial_i(n + d - 1, d) - binomial_i(r + d - 2, d))
}

/// `C(n+d-2, d-1)·(n-r+1)`, from the rank-metric Singleton bound applied to
/// catalecticant matrices.
pub fn inherited_bound(n: usize, d: usize, r: usize) -> Result<u128> {
    check_r(n, r)?;
    if d == 0 {
        return Err(Error::domain("degree must be positive"));
    }
    Ok(binomial_i(n as i64 + d as i64 - 2, d as i64 - 1) * (n - r + 1) as u128)
}

/// Upper bound on the dimension of a space of `n × n` symmetric matrices
/// over a finite field with minimum rank `r`.
pub fn schmidt_bound(n: usize, r: usize) -> Result<u128> {
    check_r(n, r)?;
    let (n, r) = (n as u128, r as u128);
    Ok(if (n - r) % 2 == 0 {
        n * (n - r + 2) / 2
    } else {
        (n + 1) * (n - r + 1) / 2
    })
}

/// Lower bound `C(n+d-1, d) - n·C(ρ+d-3, d-1)` on `dim C_ρ^{n,d}(α)`; may be
/// negative, in which case it carries no information.
pub fn dim_lower_bound_s(n: usize, d: usize, rho: usize) -> Result<i128> {
    check_r(n, rho)?;
    if d == 0 {
        return Err(Error::domain("degree must be positive"));
    }
    let (n, d, rho) = (n as i64, d as i64, rho as i64);
    Ok(binomial_i(n + d - 1, d) as i128 - n as i128 * binomial_i(rho + d - 3, d - 1) as i128)
}
