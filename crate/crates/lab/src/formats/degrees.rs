//! Degree sequences: `3,3,3,3` or run-length `2x1200,3x340,4x12`, mixed
//! freely.

use crate::error::{LabError, Result};

pub fn parse_degree_sequence(text: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim) {
        let (degree, count) = match item.split_once('x') {
            Some((d, c)) => (d.trim(), c.trim()),
            None => (item, "1"),
        };
        let degree: u32 = degree
            .parse()
            .map_err(|_| LabError::parse(1, format!("degree `{degree}` in `{item}` is not an integer")))?;
        let count: usize = count
            .parse()
            .map_err(|_| LabError::parse(1, format!("count `{count}` in `{item}` is not an integer")))?;
        out.extend(std::iter::repeat_n(degree, count));
    }
    Ok(out)
}

/// Run-length form, runs of one written as the bare degree.
pub fn format_degree_sequence(d: &[u32]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < d.len() {
        let run = d[i..].iter().take_while(|&&x| x == d[i]).count();
        parts.push(if run == 1 {
            d[i].to_string()
        } else {
            format!("{}x{run}", d[i])
        });
        i += run;
    }
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_forms() {
        assert_eq!(parse_degree_sequence("3,3,3").unwrap(), vec![3, 3, 3]);
        let d = parse_degree_sequence("2x1200,3x340,4x12").unwrap();
        assert_eq!(d.len(), 1552);
        assert_eq!(d.iter().filter(|&&x| x == 4).count(), 12);
        assert_eq!(parse_degree_sequence("5, 3x2 ,2").unwrap(), vec![5, 3, 3, 2]);
        assert_eq!(format_degree_sequence(&d), "2x1200,3x340,4x12");
        assert_eq!(format_degree_sequence(&[5, 3, 3, 2]), "5,3x2,2");
        assert!(parse_degree_sequence("3,,3").is_err());
        assert!(parse_degree_sequence("3xa").is_err());
    }
}
