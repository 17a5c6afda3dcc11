#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cfhom/chain_complex.hpp"
#include "cfhom/modpr.hpp"
#include "cfhom/stability.hpp"

namespace cfhom::io {

/// Current version of every file format below.
inline constexpr int format_version = 1;

/// Reads a whole file; throws cfhom::Error when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

// Parsers throw cfhom::Error naming `source` and the offending field, e.g.
// "rp2.complex.json: boundaries[1][0][0]: expected integer".
// Arbitrary-precision values (matrix entries, torsion orders, cardinalities)
// are written as decimal strings; parsers also accept JSON integers there.

/// {"version":1, "baseDegree":J, "ranks":[...], "boundaries":[[[row],...],...], "modulus":0}
ChainComplex parse_complex(std::string_view text, const std::string& source = "<input>");
ChainComplex read_complex(const std::filesystem::path& path);
std::string serialize_complex(const ChainComplex& c);

/// {"version":1, "manifold":{...}, "degrees":{"i":{"k":{"rank":r, "torsion":[...]}}}}
HomologyFamily parse_family(std::string_view text, const std::string& source = "<input>");
HomologyFamily read_family(const std::filesystem::path& path);
std::string serialize_family(const HomologyFamily& f);

/// {"version":1, "p":2, "maxLevel":r, "values":{"i":{"w":"#H_i(C (x) Z/p^w)"}}}
CardinalityTable parse_cardinalities(std::string_view text, const std::string& source = "<input>");
CardinalityTable read_cardinalities(const std::filesystem::path& path);
std::string serialize_cardinalities(const CardinalityTable& t);

/// {"version":1, "source":{complex}, "target":{complex}, "components":[matrix per source degree]}
ChainMap parse_chain_map(std::string_view text, const std::string& source = "<input>");
ChainMap read_chain_map(const std::filesystem::path& path);
std::string serialize_chain_map(const ChainMap& f);

}  // namespace cfhom::io
