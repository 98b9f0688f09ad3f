#pragma once

#include <string>

#include "dualham/io.hpp"

namespace dualham {

struct DotStyle {
    bool clusters = true;        // one cluster per fiber when the layout is known
    bool quartet_labels = true;  // xlabel i_red / i_blue / j_red / j_blue
};

// Red vertices are filled gray and blue ones black. Monochromatic edges are
// drawn thick in their class color, bichromatic edges dotted. Product vertices
// are named "v@x". Output depends only on the document.
std::string export_dot(const io::InstanceDocument& doc, const DotStyle& style = {});

}  // namespace dualham
