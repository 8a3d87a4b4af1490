// Copyright 2026 The Observa Authors
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

#ifndef OBSERVA_FORMAT_HPP_
#define OBSERVA_FORMAT_HPP_

#include <string>

namespace observa {

/// printf "%.6g": six significant digits, the fixed numeric output format.
std::string format_sig6(double x);

/// x rounded to what format_sig6 prints.
double round_sig6(double x);

}  // namespace observa

#endif  // OBSERVA_FORMAT_HPP_
