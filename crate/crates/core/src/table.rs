//! Character tables: loading, validation, scalar subgroups and the
//! characters trivial on them.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebraics::{abs_value, equal_within, parse_value, AlgebraicValue, Tolerance};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub name: String,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    pub name: String,
    pub values: Vec<AlgebraicValue>,
}

/// The full character table of a finite group. Column 0 is the identity class.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    group_name: String,
    order: u64,
    classes: Vec<ConjugacyClass>,
    characters: Vec<Character>,
    dimensions: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDocument {
    group: String,
    order: u64,
    classes: Vec<ConjugacyClass>,
    characters: Vec<RowDocument>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RowDocument {
    name: String,
    values: Vec<String>,
}

/// Parses a table document. JSON is detected by a leading `{`; anything else is read as TOML.
pub fn load_table(document: &str) -> Result<CharacterTable> {
    let doc: TableDocument = if document.trim_start().starts_with('{') {
        serde_json::from_str(document).map_err(|e| Error::Format(e.to_string()))?
    } else {
        toml::from_str(document).map_err(|e| Error::Format(e.to_string()))?
    };
    let characters = doc
        .characters
        .into_iter()
        .map(|row| {
            let values = row
                .values
                .iter()
                .map(|v| parse_value(v))
                .collect::<Result<Vec<_>>>()?;
            Ok(Character {
                name: row.name,
                values,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    CharacterTable::new(doc.group, doc.order, doc.classes, characters)
}

pub fn load_table_file(path: impl AsRef<Path>) -> Result<CharacterTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    load_table(&text)
}

impl CharacterTable {
    /// Assembles a table, checking its shape. Numerical consistency is left to
    /// [`validate_table`].
    pub fn new(
        group_name: impl Into<String>,
        order: u64,
        classes: Vec<ConjugacyClass>,
        characters: Vec<Character>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::Format("group order must be positive".into()));
        }
        if classes.is_empty() {
            return Err(Error::Format("table has no classes".into()));
        }
        if characters.is_empty() {
            return Err(Error::Format("table has no characters".into()));
        }
        if let Some(c) = classes.iter().find(|c| c.size == 0) {
            return Err(Error::Format(format!("class {} has size 0", c.name)));
        }
        if classes[0].size != 1 {
            return Err(Error::Format(format!(
                "first class {} must be the identity class (size 1)",
                classes[0].name
            )));
        }
        let mut dimensions = Vec::with_capacity(characters.len());
        for ch in &characters {
            if ch.values.len() != classes.len() {
                return Err(Error::Format(format!(
                    "character {} has {} values but the table has {} classes",
                    ch.name,
                    ch.values.len(),
                    classes.len()
                )));
            }
            let dim = ch.values[0]
                .re()
                .as_surd()
                .filter(|_| ch.values[0].is_real())
                .and_then(|s| s.as_integer())
                .and_then(|n| u64::try_from(n).ok())
                .filter(|&n| n > 0)
                .ok_or_else(|| {
                    Error::Format(format!(
                        "character {} must take a positive integer value on the identity class, got {}",
                        ch.name, ch.values[0]
                    ))
                })?;
            dimensions.push(dim);
        }
        Ok(Self {
            group_name: group_name.into(),
            order,
            classes,
            characters,
            dimensions,
        })
    }

    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn character(&self, i: usize) -> &Character {
        &self.characters[i]
    }

    pub fn num_characters(&self) -> usize {
        self.characters.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// `χ_i(1)`.
    pub fn dimension(&self, i: usize) -> u64 {
        self.dimensions[i]
    }

    pub fn value(&self, i: usize, class: usize) -> &AlgebraicValue {
        &self.characters[i].values[class]
    }

    /// Index of the trivial character, if the table has one.
    pub fn trivial_index(&self) -> Option<usize> {
        let one = AlgebraicValue::from_integer(1);
        self.characters
            .iter()
            .position(|c| c.values.iter().all(|v| *v == one))
    }

    /// Resolves a row name or a 0-based index.
    pub fn character_index(&self, selector: &str) -> Result<usize> {
        let by_name: Vec<usize> = self
            .characters
            .iter()
            .enumerate()
            .filter(|(_, c)| c.name == selector)
            .map(|(i, _)| i)
            .collect();
        let by_index = selector
            .parse::<usize>()
            .ok()
            .filter(|&i| i < self.characters.len());
        match (by_name.as_slice(), by_index) {
            ([i], None) => Ok(*i),
            ([], Some(i)) => Ok(i),
            ([i], Some(j)) if *i == j => Ok(j),
            ([], None) => Err(Error::Selector(format!(
                "no character named or indexed {selector:?}"
            ))),
            _ => Err(Error::Selector(format!(
                "selector {selector:?} is ambiguous"
            ))),
        }
    }

    /// Column of `|χ_i|` values as floats.
    pub fn modulus_row(&self, i: usize) -> Vec<f64> {
        self.characters[i]
            .values
            .iter()
            .map(|v| v.modulus_f64())
            .collect()
    }

    /// `(1/|G|) Σ_j |c_j| φ(c_j) conj(ψ(c_j))`, exact when all entries are.
    pub fn inner_product(&self, phi: &[AlgebraicValue], psi: &[AlgebraicValue]) -> AlgebraicValue {
        let mut acc = AlgebraicValue::zero();
        for ((class, a), b) in self.classes.iter().zip(phi).zip(psi) {
            acc = acc.add(&a.mul(&b.conj()).scale(class.size as i64));
        }
        acc.div(&AlgebraicValue::from_integer(self.order as i64))
            .expect("order is positive")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub max_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_CLASS_SUM: &str = "class_size_sum";
pub const CHECK_CLASS_DIVIDES: &str = "class_size_divides_order";
pub const CHECK_DIMENSION_SQUARES: &str = "dimension_square_sum";
pub const CHECK_ROW_ORTHONORMALITY: &str = "row_orthonormality";
pub const CHECK_COLUMN_ORTHOGONALITY: &str = "column_orthogonality";

fn residual(v: &AlgebraicValue, target: i64) -> f64 {
    let d = v.sub(&AlgebraicValue::from_integer(target));
    if d.is_exact() && d.is_zero() {
        0.0
    } else {
        d.modulus_f64()
    }
}

/// Runs the structural and orthogonality checks. Failures are reported, not raised.
pub fn validate_table(ct: &CharacterTable, tol: &Tolerance) -> ValidationReport {
    let mut checks = Vec::new();
    let order = ct.order();

    let size_sum: u64 = ct.classes.iter().map(|c| c.size).sum();
    checks.push(Check {
        name: CHECK_CLASS_SUM.into(),
        passed: size_sum == order,
        max_residual: size_sum.abs_diff(order) as f64,
    });

    let non_dividing = ct
        .classes
        .iter()
        .filter(|c| !order.is_multiple_of(c.size))
        .count();
    checks.push(Check {
        name: CHECK_CLASS_DIVIDES.into(),
        passed: non_dividing == 0,
        max_residual: non_dividing as f64,
    });

    let dim_sum: u64 = ct.dimensions.iter().map(|n| n * n).sum();
    checks.push(Check {
        name: CHECK_DIMENSION_SQUARES.into(),
        passed: dim_sum == order,
        max_residual: dim_sum.abs_diff(order) as f64,
    });

    let k = ct.num_characters();
    let mut row_max = 0.0f64;
    for i in 0..k {
        for m in i..k {
            let ip = ct.inner_product(&ct.characters[i].values, &ct.characters[m].values);
            row_max = row_max.max(residual(&ip, i64::from(i == m)));
        }
    }
    checks.push(Check {
        name: CHECK_ROW_ORTHONORMALITY.into(),
        passed: row_max <= tol.abs_eps,
        max_residual: row_max,
    });

    // (|c_j|/|G|) Σ_i χ_i(c_j) conj(χ_i(c_l)) = δ_jl
    let mut col_max = 0.0f64;
    for j in 0..ct.num_classes() {
        for l in j..ct.num_classes() {
            let mut acc = AlgebraicValue::zero();
            for ch in &ct.characters {
                acc = acc.add(&ch.values[j].mul(&ch.values[l].conj()));
            }
            let scaled = acc
                .scale(ct.classes[j].size as i64)
                .div(&AlgebraicValue::from_integer(order as i64))
                .expect("order is positive");
            col_max = col_max.max(residual(&scaled, i64::from(j == l)));
        }
    }
    let col_ok = col_max <= tol.abs_eps;
    if !col_ok {
        log::warn!(
            "column orthogonality fails for {} (residual {col_max:e}); the table may be partial",
            ct.group_name
        );
    }
    checks.push(Check {
        name: CHECK_COLUMN_ORTHOGONALITY.into(),
        passed: col_ok,
        max_residual: col_max,
    });

    ValidationReport { checks }
}

/// Fails unless the table lists every irreducible character.
pub fn require_full_table(ct: &CharacterTable, tol: &Tolerance) -> Result<()> {
    let report = validate_table(ct, tol);
    for name in [CHECK_DIMENSION_SQUARES, CHECK_COLUMN_ORTHOGONALITY] {
        let check = report.check(name).expect("check present");
        if !check.passed {
            return Err(Error::IncompleteTable(format!(
                "{name} fails with residual {}",
                check.max_residual
            )));
        }
    }
    Ok(())
}

/// The classes on which a character acts by scalars, together with their total size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Kernel {
    pub classes: Vec<usize>,
    pub order: u64,
}

impl Kernel {
    pub fn contains(&self, class: usize) -> bool {
        self.classes.binary_search(&class).is_ok()
    }
}

/// Classes with `|χ_i(c)| = χ_i(1)`.
pub fn kernel_classes(ct: &CharacterTable, i: usize, tol: &Tolerance) -> Result<Kernel> {
    let n = AlgebraicValue::from_integer(ct.dimension(i) as i64);
    let classes: Vec<usize> = (0..ct.num_classes())
        .filter(|&j| j == 0 || equal_within(&abs_value(ct.value(i, j)), &n, tol))
        .collect();
    let order = classes.iter().map(|&j| ct.classes[j].size).sum::<u64>();
    if !ct.order().is_multiple_of(order) {
        return Err(Error::InconsistentTable(format!(
            "scalar subgroup of {} has order {order}, which does not divide {}",
            ct.character(i).name,
            ct.order()
        )));
    }
    Ok(Kernel { classes, order })
}

/// Characters equal to their dimension on every class of `kernel`: the
/// trivial character first, then by ascending dimension, then file order.
pub fn trivial_on_kernel(
    ct: &CharacterTable,
    kernel: &Kernel,
    tol: &Tolerance,
) -> Result<Vec<usize>> {
    let trivial = ct
        .trivial_index()
        .ok_or_else(|| Error::IncompleteTable("no trivial character".into()))?;
    let mut rest: Vec<usize> = (0..ct.num_characters())
        .filter(|&i| i != trivial && is_trivial_on(ct, i, kernel, tol))
        .collect();
    rest.sort_by_key(|&i| ct.dimension(i));
    let mut out = vec![trivial];
    out.extend(rest);
    Ok(out)
}

pub(crate) fn is_trivial_on(
    ct: &CharacterTable,
    i: usize,
    kernel: &Kernel,
    tol: &Tolerance,
) -> bool {
    let n = AlgebraicValue::from_integer(ct.dimension(i) as i64);
    kernel
        .classes
        .iter()
        .all(|&j| equal_within(ct.value(i, j), &n, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn loads_a5() {
        let ct = fixtures::a5();
        assert_eq!(ct.order(), 60);
        assert_eq!(ct.class_sizes(), vec![1, 15, 20, 12, 12]);
        assert_eq!(ct.num_characters(), 5);
        assert_eq!(ct.dimension(1), 3);
    }

    #[test]
    fn loads_trivial_group() {
        let ct = fixtures::trivial();
        assert_eq!(ct.order(), 1);
        assert!(validate_table(&ct, &tol()).passed());
    }

    #[test]
    fn loads_s3() {
        let ct = fixtures::s3();
        assert_eq!(ct.class_sizes(), vec![1, 3, 2]);
        let dims: Vec<u64> = (0..3).map(|i| ct.dimension(i)).collect();
        assert_eq!(dims, vec![1, 1, 2]);
    }

    #[test]
    fn loads_json_documents() {
        let ct = fixtures::c3();
        assert_eq!(ct.order(), 3);
        let report = validate_table(&ct, &tol());
        assert!(report.passed(), "{report:?}");
        assert_eq!(
            report.check(CHECK_ROW_ORTHONORMALITY).unwrap().max_residual,
            0.0
        );
    }

    #[test]
    fn format_errors() {
        let missing = "group = \"x\"\nclasses = []\ncharacters = []\n";
        assert!(matches!(load_table(missing), Err(Error::Format(_))));
        let ragged = r#"
            group = "C2"
            order = 2
            classes = [{ name = "1a", size = 1 }, { name = "2a", size = 1 }]
            characters = [{ name = "t", values = ["1", "1"] }, { name = "s", values = ["1"] }]
        "#;
        assert!(matches!(load_table(ragged), Err(Error::Format(_))));
        let bad_value = r#"
            group = "C2"
            order = 2
            classes = [{ name = "1a", size = 1 }, { name = "2a", size = 1 }]
            characters = [{ name = "t", values = ["1", "1"] }, { name = "s", values = ["1", "-1 +"] }]
        "#;
        assert!(matches!(load_table(bad_value), Err(Error::Syntax { .. })));
        let bad_identity = r#"
            group = "C2"
            order = 2
            classes = [{ name = "2a", size = 1 }, { name = "1a", size = 1 }]
            characters = [{ name = "t", values = ["1", "1"] }, { name = "s", values = ["-1", "1"] }]
        "#;
        assert!(matches!(load_table(bad_identity), Err(Error::Format(_))));
    }

    #[test]
    fn a5_validates_with_zero_residual() {
        let report = validate_table(&fixtures::a5(), &tol());
        assert!(report.passed());
        for c in &report.checks {
            assert_eq!(c.max_residual, 0.0, "{}", c.name);
        }
    }

    #[test]
    fn perturbed_entry_breaks_row_orthogonality() {
        let text =
            fixtures::A5_TOML.replace("\"0\", \"(1+sqrt(5))/2\"", "\"0.1\", \"(1+sqrt(5))/2\"");
        assert_ne!(text, fixtures::A5_TOML);
        let ct = load_table(&text).unwrap();
        let report = validate_table(&ct, &tol());
        assert!(!report.passed());
        assert!(!report.check(CHECK_ROW_ORTHONORMALITY).unwrap().passed);
        assert!(report.check(CHECK_CLASS_SUM).unwrap().passed);
    }

    #[test]
    fn s3_dimension_squares() {
        let report = validate_table(&fixtures::s3(), &tol());
        assert!(report.check(CHECK_DIMENSION_SQUARES).unwrap().passed);
        assert!(report.passed());
    }

    #[test]
    fn partial_table_is_not_full() {
        let text = fixtures::S3_TOML.replace(
            "  { name = \"sign\",    values = [\"1\", \"-1\", \"1\"] },\n",
            "",
        );
        let ct = load_table(&text).unwrap();
        assert_eq!(ct.num_characters(), 2);
        let report = validate_table(&ct, &tol());
        assert!(report.check(CHECK_ROW_ORTHONORMALITY).unwrap().passed);
        assert!(!report.check(CHECK_COLUMN_ORTHOGONALITY).unwrap().passed);
        assert!(matches!(
            require_full_table(&ct, &tol()),
            Err(Error::IncompleteTable(_))
        ));
    }

    #[test]
    fn kernels() {
        let a5 = fixtures::a5();
        let k = kernel_classes(&a5, 1, &tol()).unwrap();
        assert_eq!(
            k,
            Kernel {
                classes: vec![0],
                order: 1
            }
        );
        let k = kernel_classes(&a5, 0, &tol()).unwrap();
        assert_eq!(k.order, 60);
        assert_eq!(k.classes.len(), 5);

        let q8 = fixtures::q8();
        let chi2 = q8.character_index("chi2").unwrap();
        let k = kernel_classes(&q8, chi2, &tol()).unwrap();
        assert_eq!(
            k,
            Kernel {
                classes: vec![0, 1],
                order: 2
            }
        );
    }

    #[test]
    fn kernel_order_must_divide() {
        // class sizes deliberately inconsistent: |K| = 1 + 2 = 3 does not divide 8
        let text =
            fixtures::Q8_TOML.replace("{ name = \"-1\", size = 1 }", "{ name = \"-1\", size = 2 }");
        let ct = load_table(&text).unwrap();
        assert!(matches!(
            kernel_classes(&ct, 4, &tol()),
            Err(Error::InconsistentTable(_))
        ));
    }

    #[test]
    fn trivial_on_kernel_lists() {
        let a5 = fixtures::a5();
        let k = kernel_classes(&a5, 1, &tol()).unwrap();
        assert_eq!(
            trivial_on_kernel(&a5, &k, &tol()).unwrap(),
            vec![0, 1, 2, 3, 4]
        );

        let q8 = fixtures::q8();
        let k = kernel_classes(&q8, 4, &tol()).unwrap();
        let list = trivial_on_kernel(&q8, &k, &tol()).unwrap();
        assert_eq!(list, vec![0, 1, 2, 3]);

        let t = fixtures::trivial();
        let k = kernel_classes(&t, 0, &tol()).unwrap();
        assert_eq!(trivial_on_kernel(&t, &k, &tol()).unwrap(), vec![0]);
    }

    #[test]
    fn trivial_on_kernel_dimension_squares_sum_to_quotient_order() {
        let t = tol();
        for ct in fixtures::all() {
            for i in 0..ct.num_characters() {
                let k = kernel_classes(&ct, i, &t).unwrap();
                assert_eq!(ct.order() % k.order, 0);
                let list = trivial_on_kernel(&ct, &k, &t).unwrap();
                let sum: u64 = list.iter().map(|&j| ct.dimension(j).pow(2)).sum();
                assert_eq!(sum, ct.order() / k.order, "{} {}", ct.group_name(), i);
            }
        }
    }

    #[test]
    fn selectors() {
        let a5 = fixtures::a5();
        assert_eq!(a5.character_index("chi3p").unwrap(), 2);
        assert_eq!(a5.character_index("4").unwrap(), 4);
        assert!(a5.character_index("chi7").is_err());
        assert!(a5.character_index("9").is_err());
    }
}
