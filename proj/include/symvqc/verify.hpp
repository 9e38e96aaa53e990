// Copyright 2026 The symvqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Self-check suites exposed to users through `symvqc verify`.
 *
 *   gates     closed-form A/B matrices vs bottom-up composition, elementary
 *             decompositions and their CNOT costs
 *   symmetry  fusion/splitting identities, charge conservation of gates and
 *             built circuits
 *   mapping   XXZ vs hardcore Bose-Hubbard spectra and exact commutators
 */
#pragma once

#include <string>
#include <vector>

namespace symvqc {

struct VerifyCheck {
    std::string suite;
    std::string name;
    bool passed = false;
    /// Largest deviation seen, or a short note.
    std::string detail;
};

/// Suite names accepted by run_verify_suite, without "all".
const std::vector<std::string> &verify_suite_names();

/// Runs "gates", "symmetry", "mapping" or "all". Throws std::invalid_argument
/// for other names.
std::vector<VerifyCheck> run_verify_suite(const std::string &suite);

}  // namespace symvqc
