#ifndef WDC2D_MODEL_IO_HPP
#define WDC2D_MODEL_IO_HPP

#include "wdc2d/sectors.hpp"

#include <iosfwd>
#include <string>

namespace wdc {

/// Parsed model description. Two kinds:
///   kind set : explicit point/segment primitives
///   kind prz : a local sector model (isolated / degenerate / complement)
/// See docs in README.md; numbers accept "p/q" rationals or decimals.
struct ModelFile {
    enum class Kind { set, prz };

    Kind kind = Kind::set;
    CompactSetModel set;       // kind == set
    LocalModel local;          // kind == prz
    double shrink = 1e-3;      // prz ball shrink factor
};

ModelFile load_model(std::istream& in);
ModelFile load_model_path(const std::string& path);

/// The concrete compact set: identity for `set`, build_local_set for `prz`.
CompactSetModel realize_model(const ModelFile& mf);

} // namespace wdc

#endif
