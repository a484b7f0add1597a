use crate::error::{Error, Result};
use crate::partition::PartitionSpec;

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Parses `"3,3,1"`, `"3 3 1"` or `"K_{3,3,1}"`. Whitespace is ignored
/// between tokens. Error positions are 1-based character columns.
pub fn parse_spec(input: &str) -> Result<PartitionSpec> {
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == chars.len() {
        return Err(parse_err(1, "empty input"));
    }
    let mut end = chars.len();
    if chars[i] == 'K' || chars[i] == 'k' {
        i += 1;
        skip_ws(&mut i);
        if i < chars.len() && chars[i] == '_' {
            i += 1;
            skip_ws(&mut i);
        }
        if i >= chars.len() || chars[i] != '{' {
            return Err(parse_err(i + 1, "expected '{' after K_"));
        }
        i += 1;
        let close = chars[i..]
            .iter()
            .position(|&c| c == '}')
            .map(|p| p + i)
            .ok_or_else(|| parse_err(chars.len() + 1, "missing closing '}'"))?;
        let mut after = close + 1;
        skip_ws(&mut after);
        if after < chars.len() {
            return Err(parse_err(after + 1, format!("unexpected '{}' after '}}'", chars[after])));
        }
        end = close;
    }

    let mut values: Vec<i64> = Vec::new();
    let mut expect_number = true;
    loop {
        while i < end && chars[i].is_whitespace() {
            i += 1;
        }
        if i >= end {
            break;
        }
        let c = chars[i];
        if c == ',' {
            if expect_number {
                return Err(parse_err(i + 1, "expected a size before ','"));
            }
            expect_number = true;
            i += 1;
            continue;
        }
        if c == '-' || c == '+' || c.is_ascii_digit() {
            let start = i;
            i += 1;
            while i < end && chars[i].is_ascii_digit() {
                i += 1;
            }
            let token: String = chars[start..i].iter().collect();
            let value: i64 = token
                .parse()
                .map_err(|_| parse_err(start + 1, format!("invalid number '{token}'")))?;
            values.push(value);
            expect_number = false;
            continue;
        }
        return Err(parse_err(i + 1, format!("unexpected character '{c}'")));
    }
    if expect_number && !values.is_empty() {
        return Err(parse_err(end + 1, "trailing ','"));
    }
    if values.is_empty() {
        return Err(Error::EmptySpec);
    }
    PartitionSpec::from_signed(&values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        let want = PartitionSpec::canonicalize(&[3, 3, 1]).unwrap();
        for s in ["3,3,1", "3 3 1", "1, 3 ,3", "K_{3,3,1}", " K_{ 3, 3, 1 } ", "k{1 3 3}", "3,3 1"] {
            assert_eq!(parse_spec(s).unwrap(), want, "{s}");
        }
    }

    #[test]
    fn zero_size_reported_with_index() {
        assert_eq!(
            parse_spec("3,0,2"),
            Err(Error::NonPositiveSize { index: 1, value: 0 })
        );
        assert_eq!(
            parse_spec("2,-4"),
            Err(Error::NonPositiveSize { index: 1, value: -4 })
        );
    }

    #[test]
    fn error_positions() {
        assert!(matches!(parse_spec("3,x"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(parse_spec("3,,1"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(parse_spec("3,1,"), Err(Error::Parse { position: 5, .. })));
        assert!(matches!(parse_spec("K_{3,1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_spec("K_{3} 4"), Err(Error::Parse { position: 7, .. })));
        assert!(matches!(parse_spec(""), Err(Error::Parse { position: 1, .. })));
        assert_eq!(parse_spec("K_{}"), Err(Error::EmptySpec));
    }
}
