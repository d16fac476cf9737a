//! Flat result records shared by the command-line tool.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    EntropyNats,
    EntropyBits,
    ReducedEntropy,
    JointEntropy,
    Mu12,
    Mu1,
    Mu2,
    PurityGap,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::EntropyNats => "entropy_nats",
            Quantity::EntropyBits => "entropy_bits",
            Quantity::ReducedEntropy => "reduced_entropy",
            Quantity::JointEntropy => "joint_entropy",
            Quantity::Mu12 => "mu12",
            Quantity::Mu1 => "mu1",
            Quantity::Mu2 => "mu2",
            Quantity::PurityGap => "purity_gap",
        }
    }
}

/// One computed value, optionally paired with its Fock-oracle counterpart.
/// `abs_diff` is present exactly when `oracle_value` is.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub quantity: Quantity,
    pub inputs: BTreeMap<String, f64>,
    pub value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_value: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abs_diff: Option<f64>,
}

impl OutputRecord {
    pub fn new<'a>(
        quantity: Quantity,
        inputs: impl IntoIterator<Item = (&'a str, f64)>,
        value: f64,
    ) -> Self {
        OutputRecord {
            quantity,
            inputs: inputs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect(),
            value,
            oracle_value: None,
            abs_diff: None,
        }
    }

    pub fn with_oracle(mut self, oracle_value: f64) -> Self {
        self.oracle_value = Some(oracle_value);
        self.abs_diff = Some((self.value - oracle_value).abs());
        self
    }

    pub fn is_consistent(&self) -> bool {
        match (self.oracle_value, self.abs_diff) {
            (Some(o), Some(d)) => d == (self.value - o).abs(),
            (None, None) => true,
            _ => false,
        }
    }

    pub const CSV_HEADER: &'static str = "quantity,inputs,value,oracle_value,abs_diff";

    /// CSV row matching [`Self::CSV_HEADER`]; inputs are `key=value` pairs
    /// joined by `;`, absent oracle fields are empty.
    pub fn csv_row(&self) -> String {
        let mut row = String::new();
        row.push_str(self.quantity.name());
        row.push(',');
        let inputs: Vec<String> = self
            .inputs
            .iter()
            .map(|(k, v)| format!("{k}={}", format_float(*v)))
            .collect();
        row.push_str(&inputs.join(";"));
        let _ = write!(row, ",{}", format_float(self.value));
        for field in [self.oracle_value, self.abs_diff] {
            row.push(',');
            if let Some(x) = field {
                row.push_str(&format_float(x));
            }
        }
        row
    }
}

/// Shortest decimal string that parses back to the same `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:?}")
}
