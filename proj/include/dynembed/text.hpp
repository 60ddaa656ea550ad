#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dynembed {

// Lowercases and splits on any byte that is not an ASCII letter, digit, or
// apostrophe. Bytes >= 0x80 (UTF-8 multibyte sequences) are kept inside tokens
// and left unfolded. Empty input yields an empty list.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace dynembed
