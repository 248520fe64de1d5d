#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mgw/cayley.hpp"
#include "mgw/small_cancellation.hpp"

namespace mgw {

// Group selectors:
//   free:<n>  abelian:<n>  trivial:<n>  z2free:<n>  z2abelian:<n>
//   zlinear:<w1>,<w2>,...   zmod:<m>:<w1>,<w2>,...
//   lamplighter  hall:<subset>  pqi:<subset>  bowditch:<subset>:<m>
MarkedGroup parse_group(std::string_view selector);

// The finite presentation behind a bowditch selector, if it is one.
std::optional<Presentation> selector_presentation(std::string_view selector);

}  // namespace mgw
