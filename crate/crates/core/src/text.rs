//! Line handling shared by the plain-text graph, labeling and striation
//! formats.

use std::str::FromStr;

use crate::error::{Error, Result};

/// Non-empty lines with `#` comments removed, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        }
        .trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a line holding exactly two whitespace-separated integers.
pub(crate) fn parse_pair<A: FromStr, B: FromStr>(line: usize, text: &str) -> Result<(A, B)> {
    let mut fields = text.split_whitespace();
    let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(parse_error(
            line,
            format!("expected two fields, got `{text}`"),
        ));
    };
    let a = a
        .parse()
        .map_err(|_| parse_error(line, format!("invalid integer `{a}`")))?;
    let b = b
        .parse()
        .map_err(|_| parse_error(line, format!("invalid integer `{b}`")))?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strips_comments_and_blank_lines() {
        let text = "# header\n\n3 3 # trailing\n  0 1\n";
        let lines: Vec<_> = content_lines(text).collect();
        assert_eq!(lines, vec![(3, "3 3"), (4, "0 1")]);
    }

    #[test]
    fn pair_rejects_extra_fields() {
        assert!(parse_pair::<u32, u32>(1, "1 2 3").is_err());
        assert!(parse_pair::<u32, u32>(1, "1").is_err());
        assert!(parse_pair::<u32, u32>(1, "1 -2").is_err());
        assert_eq!(parse_pair::<u32, u32>(1, " 4   5 ").unwrap(), (4, 5));
    }
}
