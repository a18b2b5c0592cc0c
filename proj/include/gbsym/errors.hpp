/* Copyright (C) 2026 The gbsym Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef GBSYM_ERRORS_HPP
#define GBSYM_ERRORS_HPP

#include <stdexcept>

namespace gbsym {

// Series with a zero constant term has no multiplicative inverse.
struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

// Exact division by t^j attempted on a series with nonzero low-order terms.
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

// Valid input that this library deliberately does not handle.
struct Unsupported : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace gbsym

#endif // GBSYM_ERRORS_HPP
