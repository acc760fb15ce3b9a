#pragma once
// Stable short statements that reports cite. The table is mirrored by the
// test fixture tests/fixtures/anchors.txt and compared byte for byte.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidcoh {

/// (key, statement) in a fixed order.
const std::vector<std::pair<std::string, std::string>>& anchor_table();

/// Statement for `key`; throws std::out_of_range for unknown keys.
const std::string& anchor(std::string_view key);

/// One `key<TAB>statement` line per entry, newline terminated.
std::string anchor_table_text();

}  // namespace braidcoh
