// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Per-update recourse records.

/// Recolored-edge counts, one entry per applied update.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecourseLedger {
    per_update: Vec<usize>,
    total: u64,
}

impl RecourseLedger {
    pub fn record(&mut self, recourse: usize) {
        self.per_update.push(recourse);
        self.total += recourse as u64;
    }

    pub fn per_update(&self) -> &[usize] {
        &self.per_update
    }

    pub fn updates(&self) -> usize {
        self.per_update.len()
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Total recourse over the number of updates; 0 for an empty ledger.
    pub fn amortized(&self) -> f64 {
        if self.per_update.is_empty() {
            0.0
        } else {
            self.total as f64 / self.per_update.len() as f64
        }
    }

    pub fn worst_case(&self) -> usize {
        self.per_update.iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats() {
        let mut l = RecourseLedger::default();
        assert_eq!(l.amortized(), 0.0);
        for r in [0, 3, 1, 0] {
            l.record(r);
        }
        assert_eq!(l.total(), 4);
        assert_eq!(l.updates(), 4);
        assert_eq!(l.worst_case(), 3);
        assert_eq!(l.amortized(), 1.0);
    }
}
