// SPDX-License-Identifier: Apache-2.0
//
// irsbc: capacity and achievable-rate regions for IRS-aided MISO broadcast channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IRSBC_VERSION_HPP
#define IRSBC_VERSION_HPP

#include <cstdint>

namespace irsbc {

inline constexpr const char *kVersion = "0.1.0";

// Default CLI seed; fixed (never wall clock) so default runs reproduce.
inline constexpr std::uint64_t kDefaultSeed = 42;

} // namespace irsbc

#endif
