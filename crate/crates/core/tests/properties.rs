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

mod common;

use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn index_round_trip(n_b in 1u64..1_000_000, p in 1u64..(1u64 << 62)) {
        prop_assert_eq!(common::index_round_trip(n_b, p), Ok(()));
    }

    #[test]
    fn kron_hadamard_algebra(seed in any::<u64>()) {
        prop_assert_eq!(common::kron_hadamard_algebra(seed), Ok(()));
    }

    #[test]
    fn loop_free_parity(seed in any::<u64>()) {
        prop_assert_eq!(common::loop_free_parity(seed), Ok(()));
    }

    #[test]
    fn stream_partition(seed in any::<u64>()) {
        prop_assert_eq!(common::stream_partition(seed), Ok(()));
    }

    #[test]
    fn determinism(seed in any::<u64>()) {
        prop_assert_eq!(common::determinism(seed), Ok(()));
    }
}

#[test]
fn index_split_examples() {
    use kron_triangles::{idx_join, idx_split};
    assert_eq!(idx_split(1, 5).unwrap(), (1, 1));
    assert_eq!(idx_split(7, 3).unwrap(), (3, 1));
    assert_eq!(idx_split(6, 3).unwrap(), (2, 3));
    assert_eq!(idx_join(3, 1, 3).unwrap(), 7);
    assert!(idx_split(0, 3).is_err());
    assert!(idx_join(1, 4, 3).is_err());
}
