#pragma once

#include <string>
#include <vector>

#include "gerbe/group.hpp"

namespace gerbe {

struct LibraryEntry {
  std::string name;
  std::string description;
  Extension ext;
  bool banded;
};

// Curated extensions, validated once at first use. Covers central (banded)
// extensions with trivial and nontrivial torsion, non-banded quotient
// actions, a trivial gerbe and split products.
const std::vector<LibraryEntry>& bundled_library();

// nullptr when no bundled extension has this name
const LibraryEntry* find_bundled(const std::string& name);

}  // namespace gerbe
