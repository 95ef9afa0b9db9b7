#pragma once

#include <string>
#include <string_view>

namespace graphcoh {

std::string_view version();

// The sign conventions the library implements, one per line. Reports carry
// the SHA-256 of this text so results computed under different conventions
// can be told apart.
std::string_view sign_conventions();
std::string sign_convention_hash();

}  // namespace graphcoh
