// Copyright 2026 The anlgmap Authors.
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

#include <string>
#include <string_view>
#include <vector>

namespace anlgmap {

// Unicode NFC normal form of a UTF-8 string. ASCII input is returned as is.
// Throws ValidationError on invalid UTF-8.
std::string nfc(std::string_view utf8);

// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string_view> split(std::string_view text, char sep);

// Strips trailing '\r', ' ' and '\t'.
std::string_view rstrip(std::string_view text);

bool is_single_token(std::string_view word);

}  // namespace anlgmap
