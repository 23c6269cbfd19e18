#pragma once

#include <string>

namespace qbcli {

/// GET over http or https; throws qb::SourceError on transport failures or a non-200 status.
std::string http_get(const std::string& url);

}  // namespace qbcli
