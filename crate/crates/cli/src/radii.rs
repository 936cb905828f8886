use std::str::FromStr;

/// A list of radii given as `a,b,c`, `a..b` or `a..b:step` (inclusive), or a
/// comma-separated mix of those.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusList(pub Vec<u32>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid radius spec {spec:?}: {reason}")]
pub struct RadiusSpecError {
    spec: String,
    reason: &'static str,
}

impl FromStr for RadiusList {
    type Err = RadiusSpecError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let fail = |reason| RadiusSpecError { spec: spec.to_string(), reason };
        let num = |s: &str| s.trim().parse::<u32>().map_err(|_| fail("not a non-negative integer"));
        let mut out = Vec::new();
        for part in spec.split(',') {
            if part.trim().is_empty() {
                return Err(fail("empty item"));
            }
            match part.split_once("..") {
                None => out.push(num(part)?),
                Some((lo, rest)) => {
                    let (hi, step) = match rest.split_once(':') {
                        Some((hi, step)) => (hi, num(step)?),
                        None => (rest, 1),
                    };
                    let (lo, hi) = (num(lo)?, num(hi)?);
                    if step == 0 {
                        return Err(fail("step must be positive"));
                    }
                    if lo > hi {
                        return Err(fail("range start exceeds end"));
                    }
                    out.extend((lo..=hi).step_by(step as usize));
                }
            }
        }
        Ok(RadiusList(out))
    }
}
