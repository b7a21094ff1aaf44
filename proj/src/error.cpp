#include "postman/error.hpp"

namespace postman {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_eulerian: return "NOT_EULERIAN";
    case Errc::unknown_link: return "UNKNOWN_LINK";
    case Errc::odd_order: return "ODD_ORDER";
    case Errc::odd_x: return "ODD_X";
    case Errc::disconnected: return "DISCONNECTED";
    case Errc::not_strongly_connected: return "NOT_STRONGLY_CONNECTED";
    case Errc::too_large: return "TOO_LARGE";
    case Errc::parity: return "PARITY";
    case Errc::demand_sum: return "DEMAND_SUM";
    case Errc::duplicate_link: return "DUPLICATE_LINK";
    case Errc::parse: return "PARSE";
    case Errc::not_simple: return "NOT_SIMPLE";
    case Errc::empty_phi: return "EMPTY";
    case Errc::usage: return "USAGE";
    case Errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace postman
