#include "lvt/error.hpp"

namespace lvt {

IoError::IoError(const std::string& path, const std::string& what) : Error(path + ": " + what), path_(path) {}

}  // namespace lvt
