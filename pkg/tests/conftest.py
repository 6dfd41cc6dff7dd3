"""Shared fixtures for the Ideal Cover test suite"""

import pytest

from src.models.flcs import ChannelOp, Flcs, FlcsTransition, flcs_model
from src.models.petri import PetriNet, PetriTransition, petri_model
from src.order.types import Fin, Nat, Prod, Star


@pytest.fixture
def ab():
    return Fin.discrete(["a", "b"])


@pytest.fixture
def abc():
    return Fin.discrete(["a", "b", "c"])


@pytest.fixture
def words_ab(ab):
    return Star(ab)


@pytest.fixture
def nat2():
    return Prod((Nat(), Nat()))


@pytest.fixture
def counter_net():
    """One place, one transition adding a token"""
    return PetriNet(1, (PetriTransition("inc", (0,), (1,)),))


@pytest.fixture
def swap_net():
    """Two places; t1 turns one token into two on the right, t2 moves one back"""
    return PetriNet(
        2,
        (
            PetriTransition("t1", (1, 0), (0, 2)),
            PetriTransition("t2", (0, 1), (1, 0)),
        ),
    )


@pytest.fixture
def read_arc_net():
    """Two places; t reads the left token and produces on the right"""
    return PetriNet(2, (PetriTransition("t", (1, 0), (1, 1)),))


@pytest.fixture
def send_ab():
    return Flcs(
        ("a", "b"),
        (
            FlcsTransition("sa", ChannelOp.SEND, "a"),
            FlcsTransition("sb", ChannelOp.SEND, "b"),
        ),
    )


@pytest.fixture
def ping_pong():
    """Sends a and b, receives a"""
    return Flcs(
        ("a", "b"),
        (
            FlcsTransition("sa", ChannelOp.SEND, "a"),
            FlcsTransition("sb", ChannelOp.SEND, "b"),
            FlcsTransition("ra", ChannelOp.RECV, "a"),
        ),
    )


@pytest.fixture
def petri_models(counter_net, swap_net, read_arc_net):
    return [petri_model(net) for net in (counter_net, swap_net, read_arc_net)]


@pytest.fixture
def flcs_models(send_ab, ping_pong):
    return [flcs_model(system) for system in (send_ab, ping_pong)]
