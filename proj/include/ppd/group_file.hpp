// Copyright 2026 The ppdrec Authors
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

#ifndef PPD_GROUP_FILE_HPP
#define PPD_GROUP_FILE_HPP

#include <string>

#include "ppd/classical.hpp"

namespace ppd {

// Text format:
//   ppdgrp 1
//   p a d k case
//   modulus coefficients, constant term first      (only when a > 1)
//   form <kind> and d rows of the Gram matrix       (only when case != linear)
//   k blocks, each a blank line, `mat`, d rows of d field encodings
// Single spaces, '\n' line ends. For quadratic forms the rows are the upper
// triangular matrix of the form.
std::string write_group_file(const GroupInput& g);

// PARSE_ERROR carrying the 1-based line number; VALIDATION_ERROR from
// validate_group_input for well-formed files with bad content.
GroupInput parse_group_file(const std::string& text);

}  // namespace ppd

#endif  // PPD_GROUP_FILE_HPP
