#pragma once

#include "pbracket/biquandle.hpp"
#include "tokens.hpp"

namespace pbracket::detail {

// Reads a `biquandle <n>` block (header included) and validates it.
Biquandle read_biquandle(Tokens& tok);

}  // namespace pbracket::detail
