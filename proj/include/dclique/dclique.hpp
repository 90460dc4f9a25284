#ifndef DCLIQUE_DCLIQUE_HPP
#define DCLIQUE_DCLIQUE_HPP

#include "dclique/analytics.hpp"
#include "dclique/engine.hpp"
#include "dclique/export.hpp"
#include "dclique/generate.hpp"
#include "dclique/link_stream.hpp"
#include "dclique/oracle.hpp"
#include "dclique/parse.hpp"
#include "dclique/predicates.hpp"
#include "dclique/static_graph.hpp"
#include "dclique/types.hpp"

#endif // DCLIQUE_DCLIQUE_HPP
