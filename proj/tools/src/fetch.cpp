#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "fetch.hpp"

#include <httplib.h>

#include "quakebrief/error.hpp"

namespace qbcli {

std::string http_get(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw qb::SourceError("http", "not an absolute url: " + url, false);
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res) throw qb::SourceError(origin, "request failed: " + httplib::to_string(res.error()));
  if (res->status != 200) {
    throw qb::SourceError(origin, "HTTP status " + std::to_string(res->status), res->status >= 500);
  }
  return res->body;
}

}  // namespace qbcli
