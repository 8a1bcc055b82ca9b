use std::collections::HashMap;

use crate::error::{Error, Result};

use super::partition::{partitions, Partition};

/// Irreducible character `chi^lambda` at the class of cycle type `mu`, by
/// the Murnaghan-Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(Characters::default().value(lambda, mu))
}

/// Memoized character values. Rim hooks are removed on the beta-set
/// (first-column hook lengths): removing an `r`-hook moves one bead from
/// `b` to `b - r`, with sign given by the beads jumped over.
#[derive(Default)]
pub struct Characters {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl Characters {
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        let l = lambda.len();
        let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
        self.beta_value(beta, mu.parts())
    }

    fn beta_value(&mut self, beta: Vec<usize>, mu: &[usize]) -> i64 {
        let Some((&r, rest)) = mu.split_first() else {
            return 1;
        };
        let key = (beta, mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let beta = &key.0;
        let mut total = 0;
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let jumped = beta.iter().filter(|&&c| c > b - r && c < b).count();
            let mut next = beta.clone();
            next[i] = b - r;
            next.sort_unstable_by(|x, y| y.cmp(x));
            let sign = if jumped % 2 == 0 { 1 } else { -1 };
            total += sign * self.beta_value(normalize(next), rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// Canonical beta-set: strip the trailing run `k-1, ..., 1, 0` of empty rows.
fn normalize(mut beta: Vec<usize>) -> Vec<usize> {
    while let Some(&last) = beta.last() {
        if last == 0 {
            beta.pop();
            for b in beta.iter_mut() {
                *b -= 1;
            }
        } else {
            break;
        }
    }
    beta
}

/// Full character table of `S_n`: rows and columns both indexed by
/// [`partitions`]`(n)`.
pub fn character_table(n: usize) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let ps = partitions(n);
    let mut chars = Characters::default();
    let table = ps.iter().map(|l| ps.iter().map(|m| chars.value(l, m)).collect()).collect();
    (ps, table)
}
