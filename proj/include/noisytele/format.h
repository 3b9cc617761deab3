// Copyright 2026 The noisytele Authors
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

#ifndef NOISYTELE_FORMAT_H
#define NOISYTELE_FORMAT_H

#include <charconv>
#include <string>

namespace noisytele {

/// 12 significant digits, shortest general form, '.' decimal separator
/// regardless of locale. Used for every number written to CSV.
inline std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    if (ec != std::errc{}) {
        return "nan";
    }
    std::string s(buf, end);
    if (s == "-0") {
        s = "0";
    }
    return s;
}

}  // namespace noisytele

#endif
