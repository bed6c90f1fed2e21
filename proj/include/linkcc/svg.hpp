#pragma once

#include <string>

#include "linkcc/diagram.hpp"
#include "linkcc/gadgets.hpp"

namespace linkcc {

// Straight-line drawing of a planar diagram. Each connected piece is laid
// out with its largest face outside; every crossing carries one element of
// class "gap" that breaks the under-strand. Throws InvalidDiagram when the
// diagram has positive genus.
std::string render_svg(const LinkDiagram& d, const GadgetLabels* labels = nullptr);

}  // namespace linkcc
