#pragma once

#include <metstruct/bilipschitz.hpp>
#include <metstruct/embeddings.hpp>
#include <metstruct/group_structures.hpp>
#include <metstruct/groups.hpp>
#include <metstruct/heaps.hpp>
#include <metstruct/isometry.hpp>
#include <metstruct/rational.hpp>
#include <metstruct/stone.hpp>
#include <metstruct/structure.hpp>
