#pragma once

#include <string>
#include <string_view>

#include "goodsemi/ideal.hpp"

namespace goodsemi {

/// Ideal file format (JSON):
///
///     { "s": 2, "mu": [0,0], "gamma": [3,1], "frame": [[0,0],[3,1]] }
///
/// "gamma" may be any valid capping bound; frames are normalized on read.
/// An optional "name" string is accepted and ignored.
IdealFrame read_ideal(std::string_view text);
IdealFrame load_ideal(const std::string& path);

/// Byte-stable text: fixed key order, frame in lexicographic order, one line
/// per key, trailing newline.
std::string write_ideal(const IdealFrame& E);
void save_ideal(const IdealFrame& E, const std::string& path);

/// "[3,1]"; "(3,1)" and "3,1" are accepted on input.
Point parse_point(std::string_view text);
std::string write_point(const Point& p);

}  // namespace goodsemi
