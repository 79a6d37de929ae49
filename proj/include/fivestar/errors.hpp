#pragma once

#include <stdexcept>
#include <string>

namespace fivestar {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mobius
struct DegenerateMap : Error { using Error::Error; };
struct NotOnSphere : Error { using Error::Error; };

// data
struct MissingFile : Error { using Error::Error; };
struct MalformedLine : Error { using Error::Error; };
struct EmptySplit : Error { using Error::Error; };
struct AlreadyAugmented : Error { using Error::Error; };

// model
struct ShapeMismatch : Error { using Error::Error; };

// evaluation
struct GoldFiltered : Error { using Error::Error; };

// checkpoint
struct CorruptCheckpoint : Error { using Error::Error; };
struct UnsupportedVersion : Error { using Error::Error; };
struct MissingVocab : Error { using Error::Error; };

} // namespace fivestar
