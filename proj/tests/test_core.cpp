#include "doctest.h"
#include "rta/calendar.hpp"
TEST_CASE("placeholder") { CHECK(rta::make_calendar({}, 10).empty()); }
