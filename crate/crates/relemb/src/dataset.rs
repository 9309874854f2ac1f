//! Relation ingestion and cell-value preparation.
//!
//! Everything downstream works on *normalized* values: lowercase, trimmed,
//! internal whitespace collapsed, and the reserved `_` separator replaced by
//! `-` so that multi-word tokens can be joined with underscores and still
//! round-trip through space-separated sentence files.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};

/// A named table: ordered attributes plus rows of nullable text cells.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub attributes: Vec<String>,
    pub rows: Vec<Vec<Option<String>>>,
}

impl Relation {
    /// Build a relation, checking that attribute names are unique and every
    /// row has exactly one cell per attribute.
    pub fn new(
        name: impl Into<String>,
        attributes: Vec<String>,
        rows: Vec<Vec<Option<String>>>,
    ) -> Result<Self> {
        let name = name.into();
        let mut seen = HashSet::new();
        for attr in &attributes {
            if !seen.insert(attr.clone()) {
                return Err(Error::Schema(format!(
                    "duplicate attribute `{attr}` in relation `{name}`"
                )));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != attributes.len() {
                return Err(Error::Schema(format!(
                    "row {} of relation `{}` has {} cells, expected {}",
                    i + 1,
                    name,
                    row.len(),
                    attributes.len()
                )));
            }
        }
        Ok(Relation {
            name,
            attributes,
            rows,
        })
    }

    pub fn attribute_index(&self, attr: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == attr)
    }

    /// Distinct normalized non-null values over all cells.
    pub fn distinct_values(&self) -> BTreeSet<String> {
        let mut set = BTreeSet::new();
        for row in &self.rows {
            for cell in row.iter().flatten() {
                let v = normalize_value(cell);
                if !v.is_empty() {
                    set.insert(v);
                }
            }
        }
        set
    }

    /// Round every cell of the named attributes to `sig_figs` significant
    /// figures. Non-numeric cells pass through unchanged.
    pub fn round_numeric_attributes(&mut self, attrs: &BTreeSet<String>, sig_figs: u32) {
        let cols: Vec<usize> = attrs
            .iter()
            .filter_map(|a| self.attribute_index(a))
            .collect();
        for row in &mut self.rows {
            for &c in &cols {
                if let Some(v) = &row[c] {
                    row[c] = Some(round_numeric(v, sig_figs));
                }
            }
        }
    }
}

/// Delimited-text layout of an input file.
#[derive(Debug, Clone)]
pub struct CsvFormat {
    pub delimiter: u8,
    pub quote: u8,
}

impl Default for CsvFormat {
    fn default() -> Self {
        CsvFormat {
            delimiter: b',',
            quote: b'"',
        }
    }
}

/// Which cell texts count as null.
///
/// The empty string is always null; the marker list is matched
/// case-insensitively against the trimmed cell.
#[derive(Debug, Clone)]
pub struct NullPolicy {
    markers: Vec<String>,
}

impl Default for NullPolicy {
    fn default() -> Self {
        NullPolicy::new(&["nan", "null", "n/a"])
    }
}

impl NullPolicy {
    pub fn new<S: AsRef<str>>(markers: &[S]) -> Self {
        NullPolicy {
            markers: markers.iter().map(|m| m.as_ref().to_lowercase()).collect(),
        }
    }

    pub fn is_null(&self, cell: &str) -> bool {
        let t = cell.trim();
        t.is_empty() || self.markers.iter().any(|m| m == &t.to_lowercase())
    }
}

/// Normalize an attribute name for use inside node labels: normalized like a
/// value, with remaining spaces turned into dashes.
pub fn normalize_attribute(raw: &str) -> String {
    normalize_value(raw).replace(' ', "-")
}

/// Load a relation from a delimited text file. The first record is the
/// header; cells are trimmed and nulls detected per `nulls`.
pub fn load_relation(
    path: impl AsRef<Path>,
    name: impl Into<String>,
    format: &CsvFormat,
    nulls: &NullPolicy,
) -> Result<Relation> {
    let path = path.as_ref();
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(format.delimiter)
        .quote(format.quote)
        .has_headers(true)
        .flexible(true)
        .from_path(path)
        .map_err(|e| match e.kind() {
            csv::ErrorKind::Io(_) => Error::io(path, std::io::Error::other(e.to_string())),
            _ => Error::Parse {
                path: path.to_path_buf(),
                row: 0,
                message: e.to_string(),
            },
        })?;

    let headers = reader
        .headers()
        .map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            row: 0,
            message: e.to_string(),
        })?
        .iter()
        .map(normalize_attribute)
        .collect::<Vec<_>>();

    let mut seen = HashSet::new();
    for h in &headers {
        if !seen.insert(h.clone()) {
            return Err(Error::Schema(format!(
                "duplicate header `{h}` in {}",
                path.display()
            )));
        }
    }

    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            row: i + 1,
            message: e.to_string(),
        })?;
        if record.len() != headers.len() {
            return Err(Error::Parse {
                path: path.to_path_buf(),
                row: i + 1,
                message: format!(
                    "ragged row: {} cells, expected {}",
                    record.len(),
                    headers.len()
                ),
            });
        }
        let row = record
            .iter()
            .map(|cell| {
                if nulls.is_null(cell) {
                    None
                } else {
                    Some(cell.trim().to_string())
                }
            })
            .collect();
        rows.push(row);
    }

    Relation::new(name, headers, rows)
}

/// Lowercase, trim, collapse internal whitespace and replace the reserved
/// `_` separator with `-`.
pub fn normalize_value(raw: &str) -> String {
    raw.to_lowercase()
        .replace('_', "-")
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
}

/// How cell values become graph tokens.
#[derive(Debug, Clone, PartialEq)]
pub enum TokenizationStrategy {
    /// Whole normalized value as one token, words joined by `_`.
    Simple,
    /// One token per whitespace-separated word.
    Flatten,
    /// Whole-value token for members of the overlap set, flatten otherwise.
    /// The set holds normalized values in collapsed (space-joined) form.
    Overlap(BTreeSet<String>),
}

impl fmt::Display for TokenizationStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenizationStrategy::Simple => write!(f, "simple"),
            TokenizationStrategy::Flatten => write!(f, "flatten"),
            TokenizationStrategy::Overlap(_) => write!(f, "overlap"),
        }
    }
}

/// Turn one non-null cell value into token labels. An empty-after-
/// normalization value yields an empty list.
pub fn tokenize_cell(value: &str, strategy: &TokenizationStrategy) -> Vec<String> {
    let norm = normalize_value(value);
    if norm.is_empty() {
        return Vec::new();
    }
    match strategy {
        TokenizationStrategy::Simple => vec![norm.replace(' ', "_")],
        TokenizationStrategy::Flatten => norm.split(' ').map(str::to_string).collect(),
        TokenizationStrategy::Overlap(shared) => {
            if shared.contains(&norm) {
                vec![norm.replace(' ', "_")]
            } else {
                norm.split(' ').map(str::to_string).collect()
            }
        }
    }
}

/// Overlap between the distinct normalized values of two relations.
#[derive(Debug, Clone)]
pub struct OverlapReport {
    /// Values appearing in at least one cell of each relation.
    pub shared: BTreeSet<String>,
    pub distinct_left: usize,
    pub distinct_right: usize,
    /// Distinct values over the union of both relations.
    pub distinct_total: usize,
    /// `shared / distinct_total * 100`.
    pub percent: f64,
}

/// Distinct normalized values shared by both relations, plus the overlap
/// percentage over all distinct values.
pub fn compute_overlap(r1: &Relation, r2: &Relation) -> OverlapReport {
    let left = r1.distinct_values();
    let right = r2.distinct_values();
    let shared: BTreeSet<String> = left.intersection(&right).cloned().collect();
    let distinct_total = left.union(&right).count();
    let percent = if distinct_total == 0 {
        0.0
    } else {
        shared.len() as f64 / distinct_total as f64 * 100.0
    };
    OverlapReport {
        distinct_left: left.len(),
        distinct_right: right.len(),
        distinct_total,
        percent,
        shared,
    }
}

/// Round a numeric string to `sig_figs` significant figures, producing a
/// canonical decimal string. Plain notation is used for magnitudes in
/// `[1e-3, 1e7]`, scientific notation outside. Non-numeric input passes
/// through unchanged.
pub fn round_numeric(value: &str, sig_figs: u32) -> String {
    let trimmed = value.trim();
    match trimmed.parse::<f64>() {
        Ok(v) if v.is_finite() => {}
        _ => return value.to_string(),
    }
    // `parse` accepts words like "nan" and "infinity"; only digit-bearing
    // strings are treated as numbers here.
    if !trimmed.bytes().any(|b| b.is_ascii_digit()) {
        return value.to_string();
    }
    match round_decimal_string(trimmed, sig_figs.max(1)) {
        Some(s) => s,
        None => value.to_string(),
    }
}

/// Exact significant-figure rounding on the decimal digit string (half-up),
/// avoiding float re-quantization.
fn round_decimal_string(s: &str, sig_figs: u32) -> Option<String> {
    let (mantissa, exp_part) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (mantissa, negative) = match mantissa.strip_prefix('-') {
        Some(rest) => (rest, true),
        None => (mantissa.strip_prefix('+').unwrap_or(mantissa), false),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
        None => (mantissa, ""),
    };
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }

    // value = 0.digits * 10^point
    let mut digits: Vec<u8> = int_part.bytes().chain(frac_part.bytes()).collect();
    let mut point = int_part.len() as i64 + exp_part as i64;
    while let Some(&b'0') = digits.first() {
        digits.remove(0);
        point -= 1;
    }
    while let Some(&b'0') = digits.last() {
        digits.pop();
    }
    if digits.is_empty() {
        return Some("0".to_string());
    }

    let k = sig_figs as usize;
    if digits.len() > k {
        let round_up = digits[k] >= b'5';
        digits.truncate(k);
        if round_up {
            let mut i = digits.len();
            loop {
                if i == 0 {
                    digits.insert(0, b'1');
                    point += 1;
                    break;
                }
                i -= 1;
                if digits[i] == b'9' {
                    digits[i] = b'0';
                } else {
                    digits[i] += 1;
                    break;
                }
            }
        }
        while let Some(&b'0') = digits.last() {
            digits.pop();
        }
        if digits.is_empty() {
            return Some("0".to_string());
        }
    }

    let body = render_decimal(&digits, point);
    Some(if negative { format!("-{body}") } else { body })
}

fn render_decimal(digits: &[u8], point: i64) -> String {
    let text = String::from_utf8(digits.to_vec()).expect("ascii digits");
    // plain for |x| in [1e-3, 1e7]: point in [-2, 7], plus the exact 1e7 case
    let plain = (-2..=7).contains(&point) || (point == 8 && text == "1");
    if plain {
        if point <= 0 {
            format!("0.{}{}", "0".repeat(point.unsigned_abs() as usize), text)
        } else if point as usize >= text.len() {
            format!("{}{}", text, "0".repeat(point as usize - text.len()))
        } else {
            format!("{}.{}", &text[..point as usize], &text[point as usize..])
        }
    } else if text.len() == 1 {
        format!("{}e{}", text, point - 1)
    } else {
        format!("{}.{}e{}", &text[..1], &text[1..], point - 1)
    }
}

/// Scope of a functional dependency over a two-relation scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdScope {
    Both,
    LeftOnly,
    RightOnly,
}

/// `lhs -> rhs` dependency used to impute nulls and merge conflicting values
/// through skolem placeholders.
#[derive(Debug, Clone)]
pub struct FunctionalDependency {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub scope: FdScope,
}

impl FunctionalDependency {
    pub fn new(lhs: Vec<String>, rhs: Vec<String>, scope: FdScope) -> Result<Self> {
        if lhs.is_empty() || rhs.is_empty() {
            return Err(Error::Config(
                "functional dependency needs non-empty lhs and rhs".into(),
            ));
        }
        if lhs.iter().any(|a| rhs.contains(a)) {
            return Err(Error::Config(
                "functional dependency lhs and rhs must be disjoint".into(),
            ));
        }
        Ok(FunctionalDependency { lhs, rhs, scope })
    }
}

/// A placeholder token minted for an unknown or conflicting value.
///
/// Identity: same dependency, same lhs values, same rhs attribute — the same
/// placeholder, across both relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkolemPlaceholder {
    pub id: String,
    pub fd_index: usize,
    pub lhs_values: Vec<String>,
    pub rhs_attribute: String,
}

struct SkolemMint {
    taken: HashSet<String>,
    by_key: BTreeMap<(usize, Vec<String>, String), String>,
}

impl SkolemMint {
    fn new(data_values: HashSet<String>) -> Self {
        SkolemMint {
            taken: data_values,
            by_key: BTreeMap::new(),
        }
    }

    fn placeholder(&mut self, fd: usize, lhs: &[String], attr: &str) -> String {
        let key = (fd, lhs.to_vec(), attr.to_string());
        if let Some(id) = self.by_key.get(&key) {
            return id.clone();
        }
        let base = format!("sk-{fd}-{attr}-{}", lhs.join("+").replace(' ', "-"));
        let mut candidate = base.clone();
        let mut n = 1;
        while self.taken.contains(&candidate) {
            n += 1;
            candidate = format!("{base}~{n}");
        }
        self.taken.insert(candidate.clone());
        self.by_key.insert(key, candidate.clone());
        candidate
    }
}

/// Apply skolemization: group rows of both relations by the FD's lhs values,
/// then per rhs attribute fill nulls from a unique group value, or mint a
/// shared placeholder when the group conflicts or is entirely null.
/// Conflicting values are replaced dataset-wide for that attribute.
/// Rows whose lhs contains a null are left out of the grouping.
pub fn apply_skolem(
    r1: &Relation,
    r2: &Relation,
    fds: &[FunctionalDependency],
) -> Result<(Relation, Relation)> {
    let mut rels = [r1.clone(), r2.clone()];

    let mut data_values = HashSet::new();
    for rel in &rels {
        for row in &rel.rows {
            for cell in row.iter().flatten() {
                data_values.insert(normalize_value(cell));
            }
        }
    }
    let mut mint = SkolemMint::new(data_values);

    for (fd_idx, fd) in fds.iter().enumerate() {
        let in_scope: Vec<usize> = match fd.scope {
            FdScope::Both => vec![0, 1],
            FdScope::LeftOnly => vec![0],
            FdScope::RightOnly => vec![1],
        };
        let mut columns = Vec::new(); // (rel, lhs cols, rhs cols)
        for &ri in &in_scope {
            let rel = &rels[ri];
            let lhs: Option<Vec<usize>> =
                fd.lhs.iter().map(|a| rel.attribute_index(a)).collect();
            let rhs: Option<Vec<usize>> =
                fd.rhs.iter().map(|a| rel.attribute_index(a)).collect();
            match (lhs, rhs) {
                (Some(l), Some(r)) => columns.push((ri, l, r)),
                _ => {
                    return Err(Error::Config(format!(
                        "functional dependency references an attribute missing from relation `{}`",
                        rel.name
                    )))
                }
            }
        }

        // group key -> list of (relation, row)
        let mut groups: BTreeMap<Vec<String>, Vec<(usize, usize)>> = BTreeMap::new();
        for (ri, lhs_cols, _) in &columns {
            for (row_idx, row) in rels[*ri].rows.iter().enumerate() {
                let key: Option<Vec<String>> = lhs_cols
                    .iter()
                    .map(|&c| row[c].as_deref().map(normalize_value))
                    .collect();
                if let Some(key) = key {
                    groups.entry(key).or_default().push((*ri, row_idx));
                }
            }
        }

        // per rhs position: normalized value -> placeholder for the
        // dataset-wide conflict replacement pass
        let mut conflict_map: Vec<BTreeMap<String, String>> =
            vec![BTreeMap::new(); fd.rhs.len()];

        for (key, members) in &groups {
            for (pos, attr) in fd.rhs.iter().enumerate() {
                let mut values: BTreeMap<String, String> = BTreeMap::new(); // normalized -> original
                let mut has_null = false;
                for &(ri, row_idx) in members {
                    let col = columns.iter().find(|(r, _, _)| *r == ri).unwrap().2[pos];
                    match &rels[ri].rows[row_idx][col] {
                        Some(v) => {
                            values.entry(normalize_value(v)).or_insert_with(|| v.clone());
                        }
                        None => has_null = true,
                    }
                }
                match values.len() {
                    0 => {
                        if has_null {
                            let ph = mint.placeholder(fd_idx, key, attr);
                            fill_group_nulls(&mut rels, &columns, members, pos, &ph);
                        }
                    }
                    1 => {
                        if has_null {
                            let fill = values.values().next().unwrap().clone();
                            fill_group_nulls(&mut rels, &columns, members, pos, &fill);
                        }
                    }
                    _ => {
                        let ph = mint.placeholder(fd_idx, key, attr);
                        if has_null {
                            fill_group_nulls(&mut rels, &columns, members, pos, &ph);
                        }
                        for norm in values.keys() {
                            // a value already claimed by an earlier conflict
                            // class keeps its first placeholder; the classes
                            // effectively merge on it
                            let existing = conflict_map[pos]
                                .values()
                                .find(|p| *p == norm)
                                .cloned();
                            let target = match conflict_map[pos].get(norm) {
                                Some(prev) => prev.clone(),
                                None => existing.unwrap_or_else(|| ph.clone()),
                            };
                            conflict_map[pos].insert(norm.clone(), target);
                        }
                    }
                }
            }
        }

        // dataset-wide replacement of conflicting values
        for (pos, map) in conflict_map.iter().enumerate() {
            if map.is_empty() {
                continue;
            }
            for (ri, _, rhs_cols) in &columns {
                let col = rhs_cols[pos];
                for row in &mut rels[*ri].rows {
                    if let Some(v) = &row[col] {
                        if let Some(ph) = map.get(&normalize_value(v)) {
                            row[col] = Some(ph.clone());
                        }
                    }
                }
            }
        }
    }

    let [a, b] = rels;
    Ok((a, b))
}

fn fill_group_nulls(
    rels: &mut [Relation; 2],
    columns: &[(usize, Vec<usize>, Vec<usize>)],
    members: &[(usize, usize)],
    pos: usize,
    value: &str,
) {
    for &(ri, row_idx) in members {
        let col = columns.iter().find(|(r, _, _)| *r == ri).unwrap().2[pos];
        if rels[ri].rows[row_idx][col].is_none() {
            rels[ri].rows[row_idx][col] = Some(value.to_string());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn rel(name: &str, attrs: &[&str], rows: &[&[Option<&str>]]) -> Relation {
        Relation::new(
            name,
            attrs.iter().map(|s| s.to_string()).collect(),
            rows.iter()
                .map(|r| r.iter().map(|c| c.map(str::to_string)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn load_minimal_table() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, "a,b\n1,x").unwrap();
        let r = load_relation(f.path(), "t", &CsvFormat::default(), &NullPolicy::default())
            .unwrap();
        assert_eq!(r.attributes, vec!["a", "b"]);
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0][0].as_deref(), Some("1"));
    }

    #[test]
    fn load_ragged_row_errors_with_index() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, "a,b\n1").unwrap();
        let err = load_relation(f.path(), "t", &CsvFormat::default(), &NullPolicy::default())
            .unwrap_err();
        match err {
            Error::Parse { row, .. } => assert_eq!(row, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn load_duplicate_header_errors() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, "a,a\n1,2").unwrap();
        let err = load_relation(f.path(), "t", &CsvFormat::default(), &NullPolicy::default())
            .unwrap_err();
        assert!(matches!(err, Error::Schema(_)));
    }

    #[test]
    fn null_markers_detected() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, "a,b\nNaN, x \n,N/A").unwrap();
        let r = load_relation(f.path(), "t", &CsvFormat::default(), &NullPolicy::default())
            .unwrap();
        assert_eq!(r.rows[0][0], None);
        assert_eq!(r.rows[0][1].as_deref(), Some("x"));
        assert_eq!(r.rows[1][0], None);
        assert_eq!(r.rows[1][1], None);
    }

    #[test]
    fn tokenize_simple_joins_words() {
        assert_eq!(
            tokenize_cell("Saving Private Ryan", &TokenizationStrategy::Simple),
            vec!["saving_private_ryan"]
        );
    }

    #[test]
    fn tokenize_flatten_splits_words() {
        assert_eq!(
            tokenize_cell("iPad 4th", &TokenizationStrategy::Flatten),
            vec!["ipad", "4th"]
        );
    }

    #[test]
    fn tokenize_overlap_switches_on_membership() {
        let shared: BTreeSet<String> = ["beer one".to_string()].into_iter().collect();
        assert_eq!(
            tokenize_cell("beer one", &TokenizationStrategy::Overlap(shared)),
            vec!["beer_one"]
        );
        assert_eq!(
            tokenize_cell("beer one", &TokenizationStrategy::Overlap(BTreeSet::new())),
            vec!["beer", "one"]
        );
    }

    #[test]
    fn tokenize_empty_value_yields_empty_list() {
        assert!(tokenize_cell("   ", &TokenizationStrategy::Simple).is_empty());
    }

    #[test]
    fn normalize_replaces_reserved_separator() {
        assert_eq!(normalize_value("a_b  C"), "a-b c");
    }

    #[test]
    fn round_numeric_examples() {
        assert_eq!(round_numeric("3.14159", 3), "3.14");
        assert_eq!(round_numeric("1998", 4), "1998");
        assert_eq!(round_numeric("0.004567", 2), "0.0046");
        assert_eq!(round_numeric("not a number", 3), "not a number");
    }

    #[test]
    fn round_numeric_boundaries() {
        assert_eq!(round_numeric("10000000", 3), "10000000");
        assert_eq!(round_numeric("123456789", 3), "1.23e8");
        assert_eq!(round_numeric("0.0001234", 2), "1.2e-4");
        assert_eq!(round_numeric("-2.5", 1), "-3");
        assert_eq!(round_numeric("0", 3), "0");
        assert_eq!(round_numeric("1e7", 2), "10000000");
    }

    #[test]
    fn round_numeric_idempotent() {
        for v in ["3.14159", "0.004567", "987654", "1.5e-5", "-42.042"] {
            let once = round_numeric(v, 3);
            assert_eq!(round_numeric(&once, 3), once, "value {v}");
        }
    }

    #[test]
    fn overlap_basic() {
        let r1 = rel("l", &["x"], &[&[Some("a")], &[Some("b")]]);
        let r2 = rel("r", &["x"], &[&[Some("b")], &[Some("c")]]);
        let o = compute_overlap(&r1, &r2);
        assert_eq!(o.shared.iter().cloned().collect::<Vec<_>>(), vec!["b"]);
        assert_eq!(o.distinct_total, 3);
    }

    #[test]
    fn overlap_disjoint_is_empty() {
        let r1 = rel("l", &["x"], &[&[Some("a")]]);
        let r2 = rel("r", &["x"], &[&[Some("c")]]);
        assert!(compute_overlap(&r1, &r2).shared.is_empty());
    }

    #[test]
    fn skolem_worked_example() {
        // R1(a, N1, c, N2) and R2(a, b, c', N3) with key a1
        let r1 = rel(
            "r1",
            &["a1", "a2", "a3", "a4"],
            &[&[Some("a"), None, Some("c"), None]],
        );
        let r2 = rel(
            "r2",
            &["a1", "a2", "a3", "a4"],
            &[&[Some("a"), Some("b"), Some("c'"), None]],
        );
        let fd = FunctionalDependency::new(
            vec!["a1".into()],
            vec!["a2".into(), "a3".into(), "a4".into()],
            FdScope::Both,
        )
        .unwrap();
        let (s1, s2) = apply_skolem(&r1, &r2, &[fd]).unwrap();

        // null filled from the unique value
        assert_eq!(s1.rows[0][1].as_deref(), Some("b"));
        assert_eq!(s2.rows[0][1].as_deref(), Some("b"));
        // conflict replaced by one shared placeholder
        let x1 = s1.rows[0][2].clone().unwrap();
        assert_eq!(s2.rows[0][2].as_deref(), Some(x1.as_str()));
        assert_ne!(x1, "c");
        assert_ne!(x1, "c'");
        // both nulls merged into one shared placeholder, distinct from x1
        let x2 = s1.rows[0][3].clone().unwrap();
        assert_eq!(s2.rows[0][3].as_deref(), Some(x2.as_str()));
        assert_ne!(x1, x2);
    }

    #[test]
    fn skolem_identity_without_nulls_or_conflicts() {
        let r1 = rel("r1", &["k", "v"], &[&[Some("a"), Some("x")]]);
        let r2 = rel("r2", &["k", "v"], &[&[Some("a"), Some("x")]]);
        let fd =
            FunctionalDependency::new(vec!["k".into()], vec!["v".into()], FdScope::Both).unwrap();
        let (s1, s2) = apply_skolem(&r1, &r2, &[fd]).unwrap();
        assert_eq!(s1.rows, r1.rows);
        assert_eq!(s2.rows, r2.rows);
    }

    #[test]
    fn skolem_single_value_fills_null_without_placeholder() {
        let r1 = rel("r1", &["k", "v"], &[&[Some("a"), Some("c")]]);
        let r2 = rel("r2", &["k", "v"], &[&[Some("a"), None]]);
        let fd =
            FunctionalDependency::new(vec!["k".into()], vec!["v".into()], FdScope::Both).unwrap();
        let (_, s2) = apply_skolem(&r1, &r2, &[fd]).unwrap();
        assert_eq!(s2.rows[0][1].as_deref(), Some("c"));
    }

    #[test]
    fn skolem_unknown_attribute_errors() {
        let r1 = rel("r1", &["k"], &[&[Some("a")]]);
        let r2 = rel("r2", &["k"], &[&[Some("a")]]);
        let fd = FunctionalDependency::new(vec!["k".into()], vec!["zz".into()], FdScope::Both)
            .unwrap();
        assert!(apply_skolem(&r1, &r2, &[fd]).is_err());
    }

    #[test]
    fn skolem_conflict_replaces_dataset_wide() {
        // the conflicting value c also occurs in an unrelated row; it must be
        // rewritten there too
        let r1 = rel(
            "r1",
            &["k", "v"],
            &[&[Some("a"), Some("c")], &[Some("z"), Some("c")]],
        );
        let r2 = rel("r2", &["k", "v"], &[&[Some("a"), Some("c'")]]);
        let fd =
            FunctionalDependency::new(vec!["k".into()], vec!["v".into()], FdScope::Both).unwrap();
        let (s1, s2) = apply_skolem(&r1, &r2, &[fd]).unwrap();
        let ph = s1.rows[0][1].clone().unwrap();
        assert_eq!(s1.rows[1][1].as_deref(), Some(ph.as_str()));
        assert_eq!(s2.rows[0][1].as_deref(), Some(ph.as_str()));
    }

    #[test]
    fn skolem_idempotent_and_shape_preserving() {
        let r1 = rel(
            "r1",
            &["k", "v", "w"],
            &[
                &[Some("a"), None, Some("c")],
                &[Some("b"), Some("y"), None],
                &[None, Some("q"), Some("r")],
            ],
        );
        let r2 = rel(
            "r2",
            &["k", "v", "w"],
            &[&[Some("a"), Some("x"), Some("c2")], &[Some("b"), None, None]],
        );
        let fd = FunctionalDependency::new(
            vec!["k".into()],
            vec!["v".into(), "w".into()],
            FdScope::Both,
        )
        .unwrap();
        let (s1, s2) = apply_skolem(&r1, &r2, std::slice::from_ref(&fd)).unwrap();
        assert_eq!(s1.rows.len(), r1.rows.len());
        assert_eq!(s1.attributes, r1.attributes);
        let (t1, t2) = apply_skolem(&s1, &s2, &[fd]).unwrap();
        assert_eq!(t1.rows, s1.rows);
        assert_eq!(t2.rows, s2.rows);
    }
}
