#ifndef SPLITGRAPH_VERSION_HPP
#define SPLITGRAPH_VERSION_HPP

namespace splitgraph {

inline constexpr const char* kEngineVersion = "0.1.0";

}

#endif
