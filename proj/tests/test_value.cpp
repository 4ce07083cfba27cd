#include <doctest.h>
#include "contlog/value.hpp"
using namespace contlog;
TEST_CASE("smoke") { CHECK(Value(1, 2).str() == "1/2"); }
