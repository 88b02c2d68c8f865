/// Integers separated by commas and/or whitespace. A lone token of two or
/// more digits is read one digit per value, which is only unambiguous for
/// `n ≤ 9`.
pub fn parse_ints(text: &str) -> Result<Vec<i64>, String> {
    let text = text.trim();
    let separated = text.contains(',') || text.contains(char::is_whitespace);
    if !separated && text.len() > 1 && text.bytes().all(|b| b.is_ascii_digit()) {
        if text.len() > 9 {
            return Err(format!(
                "compact digit string '{text}' is only accepted for n ≤ 9; separate values with commas or spaces"
            ));
        }
        return Ok(text.bytes().map(|b| (b - b'0') as i64).collect());
    }
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| format!("invalid integer '{tok}'"))
        })
        .collect()
}
