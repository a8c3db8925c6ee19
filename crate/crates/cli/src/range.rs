use std::fmt;
use std::str::FromStr;

/// A nonempty, ordered list of parameter values: `N`, `A..B`, `A..=B`,
/// or a comma list of those.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange(Vec<u32>);

impl ParamRange {
    pub fn values(&self) -> &[u32] {
        &self.0
    }
}

fn parse_int(s: &str) -> Result<u32, String> {
    s.trim().parse().map_err(|_| format!("`{s}` is not a nonnegative integer"))
}

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if let Some((lo, hi)) = part.split_once("..=") {
                out.extend(parse_int(lo)?..=parse_int(hi)?);
            } else if let Some((lo, hi)) = part.split_once("..") {
                out.extend(parse_int(lo)?..parse_int(hi)?);
            } else {
                out.push(parse_int(part)?);
            }
        }
        out.sort_unstable();
        out.dedup();
        if out.is_empty() {
            return Err(format!("range `{s}` is empty"));
        }
        Ok(Self(out))
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(s: &str) -> Vec<u32> {
        s.parse::<ParamRange>().unwrap().0
    }

    #[test]
    fn forms() {
        assert_eq!(vals("4"), vec![4]);
        assert_eq!(vals("2..5"), vec![2, 3, 4]);
        assert_eq!(vals("2..=5"), vec![2, 3, 4, 5]);
        assert_eq!(vals("7, 3,3..=4"), vec![3, 4, 7]);
    }

    #[test]
    fn rejects() {
        for bad in ["", "3..3", "5..=2", "x", "-1", "1..b"] {
            assert!(bad.parse::<ParamRange>().is_err(), "{bad}");
        }
    }
}
