#pragma once

#include "rigidpq/error.hpp"
#include "rigidpq/group.hpp"
#include "rigidpq/io.hpp"
#include "rigidpq/product_builder.hpp"
#include "rigidpq/product_quotient.hpp"
#include "rigidpq/rigidity.hpp"
#include "rigidpq/search.hpp"
#include "rigidpq/triangle_cover.hpp"
