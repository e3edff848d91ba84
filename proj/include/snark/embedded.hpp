#pragma once

#include <string_view>
#include <vector>

namespace snark::embedded {

struct File {
  std::string_view name;
  std::string_view text;
};

// Catalog graph files (data/catalog/*.graph), sorted by file name.
const std::vector<File>& catalog_files();
// Shipped corpus files (corpus/*.design), sorted by file name.
const std::vector<File>& corpus_files();

}  // namespace snark::embedded
