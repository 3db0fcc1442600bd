#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "phcalc/persistence.hpp"

namespace phcalc::render {

/// Aligned ASCII bars, one row per unit of multiplicity:
///
///   H1 barcode, levels 0..5
///            K0  K1  K2  K3  K4  K5  inf
///   [1,5)        *---------------o
///   [3,inf)              *----------->
///
/// '*' marks the birth level, 'o' a finite death and '>' a bar that never
/// dies.
std::string render_text(const Barcode& barcode, std::size_t last_level);

/// Standalone SVG with one panel per barcode, levels on the horizontal axis.
std::string render_svg(std::span<const Barcode> barcodes, std::size_t last_level);

}  // namespace phcalc::render
