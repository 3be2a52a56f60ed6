// Copyright 2026 The qatpg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qatpg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Inputs that violate an operation's contract (mismatched qubit counts,
// anti-commuting generators, -I in a group, bad circuit text, ...).
struct ContractError : Error {
    using Error::Error;
};

// The requested task has no solution (undetectable fault, too few candidate
// fault sites). Maps to CLI exit code 2.
struct InfeasibleError : Error {
    using Error::Error;
};

// A numeric routine failed its own verification (LP residual too large,
// perturbation validation exhausted). Maps to CLI exit code 3.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace qatpg
