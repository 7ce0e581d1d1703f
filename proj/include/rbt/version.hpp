#ifndef RBT_VERSION_HPP_
#define RBT_VERSION_HPP_

namespace rbt {

inline const char* version() { return RBT_VERSION; }

}  // namespace rbt

#endif
