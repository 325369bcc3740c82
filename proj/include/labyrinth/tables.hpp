#pragma once

#include "labyrinth/nav_table.hpp"

namespace labyrinth {

enum class AlgorithmId { Tremaux, Explore2, Ariadne, Theseus, WaitForMommy };

/// Single-agent depth-first search with markers E, F, B.
const NavigationTable& tremaux_table();

/// Two indistinguishable agents exploring together; adds D (edge used twice).
const NavigationTable& exploration_table();

/// Rendezvous pair. Ariadne is agent 0, Theseus agent 1; each consults only
/// its own discoveries.
const NavigationTable& ariadne_table();
const NavigationTable& theseus_table();

}  // namespace labyrinth
