"""Tests for Petri nets, channel systems and model files"""

from itertools import product

import pytest

from src.errors import DimensionError, ModelSemanticError, ModelSyntaxError
from src.models.flcs import ChannelOp, Flcs, FlcsTransition, channel, flcs_lift, flcs_step
from src.models.model_file import parse_model, parse_model_source
from src.models.petri import PetriNet, PetriTransition, marking, petri_lift, petri_step
from src.order.ideals import OMEGA, NatI, ProdI, _principal, denote_bounded, ideal_equiv, ideal_member
from src.order.types import FinV, WordV
from src.order.values import enumerate_values, value_leq
from src.syntax.literals import parse_ideal


def omega_marking(*bounds):
    return ProdI(tuple(NatI(OMEGA if b == "w" else b) for b in bounds))


SEND_A = FlcsTransition("sa", ChannelOp.SEND, "a")
SEND_B = FlcsTransition("sb", ChannelOp.SEND, "b")
RECV_A = FlcsTransition("ra", ChannelOp.RECV, "a")
RECV_C = FlcsTransition("rc", ChannelOp.RECV, "c")
ABC_CHANNEL = Flcs(("a", "b", "c"), (SEND_A, SEND_B, RECV_A, RECV_C))

CURATED_PRODUCTS = [
    '""',
    "a? b?",
    "{b}* a? c?",
    "{a,b}* c?",
    "{c}* {a}*",
    "b? {b,c}* a? a?",
    "{a,b,c}*",
]


class TestPetri:
    def test_step(self, swap_net, counter_net):
        t1 = swap_net.transitions[0]
        assert petri_step(swap_net, marking((1, 0)), t1) == marking((0, 2))
        assert petri_step(swap_net, marking((0, 5)), t1) is None
        assert petri_step(counter_net, marking((7,)), counter_net.transitions[0]) == marking((8,))

    def test_wrong_dimension(self, swap_net):
        with pytest.raises(DimensionError):
            petri_step(swap_net, marking((1,)), swap_net.transitions[0])
        with pytest.raises(DimensionError):
            PetriNet(2, (PetriTransition("t", (1,), (0, 1)),))

    def test_lift_keeps_omega(self, swap_net):
        t2 = swap_net.transitions[1]
        assert petri_lift(swap_net, t2, omega_marking("w", 1)) == omega_marking("w", 0)
        net = PetriNet(1, (PetriTransition("t", (1,), (2,)), PetriTransition("u", (2,), (0,))))
        assert petri_lift(net, net.transitions[0], omega_marking("w")) == omega_marking("w")
        assert petri_lift(net, net.transitions[1], omega_marking(1)) is None

    def test_effect_vector_transitions(self):
        t = PetriTransition.from_delta("t", (0, -1, 2))
        assert t.pre == (0, 1, 0)
        assert t.post == (0, 0, 2)

    def test_monotonic(self, swap_net):
        markings = [marking(m) for m in product(range(7), repeat=2)]
        for t in swap_net.transitions:
            for m, n in product(markings, repeat=2):
                if not all(a.n <= b.n for a, b in zip(m.items, n.items)):
                    continue
                image = petri_step(swap_net, m, t)
                if image is None:
                    continue
                larger = petri_step(swap_net, n, t)
                assert larger is not None
                assert all(a.n <= b.n for a, b in zip(image.items, larger.items))

    def test_lift_agrees_on_principal_ideals(self, swap_net, read_arc_net):
        for net in (swap_net, read_arc_net):
            for m in product(range(6), repeat=2):
                for t in net.transitions:
                    image = petri_step(net, marking(m), t)
                    lifted = petri_lift(net, t, _principal(net.state_type, marking(m)))
                    if image is None:
                        assert lifted is None
                    else:
                        assert lifted == _principal(net.state_type, image)


class TestFlcs:
    def test_step(self):
        assert flcs_step(ABC_CHANNEL, channel("a"), SEND_B) == channel("ab")
        assert flcs_step(ABC_CHANNEL, channel("bab"), RECV_A) == channel("b")
        assert flcs_step(ABC_CHANNEL, channel("ab"), RECV_C) is None

    @pytest.mark.parametrize(
        "before, after",
        [("a? b?", "b?"), ("{b}* a? c?", "c?"), ("{a,b}* c?", "{a,b}* c?")],
    )
    def test_lift_receive(self, before, after):
        ty = ABC_CHANNEL.state_type
        lifted = flcs_lift(ABC_CHANNEL, RECV_A, parse_ideal(ty, before))
        assert ideal_equiv(ty, lifted, parse_ideal(ty, after))

    def test_lift_receive_undefined(self):
        ty = ABC_CHANNEL.state_type
        assert flcs_lift(ABC_CHANNEL, RECV_A, parse_ideal(ty, '""')) is None
        assert flcs_lift(ABC_CHANNEL, RECV_A, parse_ideal(ty, "{b}* c?")) is None

    def test_lift_send_appends(self):
        ty = ABC_CHANNEL.state_type
        lifted = flcs_lift(ABC_CHANNEL, SEND_A, parse_ideal(ty, "{a}*"))
        assert lifted == parse_ideal(ty, "{a}*")

    def test_monotonic(self):
        ty = ABC_CHANNEL.state_type
        words = enumerate_values(ty, 6)
        for t in ABC_CHANNEL.transitions:
            for u, v in product(words, repeat=2):
                image = flcs_step(ABC_CHANNEL, u, t)
                if image is None or not value_leq(ty, u, v):
                    continue
                larger = flcs_step(ABC_CHANNEL, v, t)
                assert larger is not None
                assert value_leq(ty, image, larger)

    def test_lift_agrees_on_principal_ideals(self):
        ty = ABC_CHANNEL.state_type
        for w in enumerate_values(ty, 5):
            for t in ABC_CHANNEL.transitions:
                image = flcs_step(ABC_CHANNEL, w, t)
                lifted = flcs_lift(ABC_CHANNEL, t, _principal(ty, w))
                if image is None:
                    assert lifted is None
                else:
                    assert ideal_equiv(ty, lifted, _principal(ty, image))

    @pytest.mark.parametrize("text", CURATED_PRODUCTS)
    def test_lift_contains_every_image(self, text):
        ty = ABC_CHANNEL.state_type
        ideal = parse_ideal(ty, text)
        for t in ABC_CHANNEL.transitions:
            lifted = flcs_lift(ABC_CHANNEL, t, ideal)
            for w in denote_bounded(ty, ideal, 6):
                image = flcs_step(ABC_CHANNEL, w, t)
                if image is not None:
                    assert lifted is not None and ideal_member(ty, image, lifted)

    @pytest.mark.parametrize("text", CURATED_PRODUCTS)
    def test_lift_is_the_least_product(self, text):
        ty = ABC_CHANNEL.state_type
        ideal = parse_ideal(ty, text)
        for t in ABC_CHANNEL.transitions:
            lifted = flcs_lift(ABC_CHANNEL, t, ideal)
            if lifted is None:
                continue
            for u in denote_bounded(ty, lifted, 5):
                if t.op is ChannelOp.RECV:
                    source = WordV((FinV(t.letter),) + u.items)
                    assert ideal_member(ty, source, ideal)
                    assert flcs_step(ABC_CHANNEL, source, t) == u
                else:
                    prefix = WordV(u.items[:-1])
                    assert ideal_member(ty, u, ideal) or (
                        u.items[-1:] == (FinV(t.letter),) and ideal_member(ty, prefix, ideal)
                    )


class TestModelFile:
    def test_minimal_petri(self):
        model = parse_model("petri places=1\ntrans inc pre=(0) post=(1)\n")
        assert model.kind == "petri"
        assert model.source.places == 1
        assert model.transition_names() == ("inc",)

    def test_comments_blank_lines_and_deltas(self):
        text = "# a net\n\npetri places=2   # header\ntrans t1 pre=(1,0) post=(0,2)\n\ntrans t2 delta=(1,-1)\n"
        net = parse_model_source(text)
        assert net.transitions[1].pre == (0, 1)
        assert net.transitions[1].post == (1, 0)

    def test_flcs(self):
        system = parse_model_source("flcs alphabet={a,b}\ntrans s1 send a\ntrans r1 recv b")
        assert system.alphabet == ("a", "b")
        assert system.transitions[1].op is ChannelOp.RECV

    def test_keywords_as_names(self):
        net = parse_model_source("petri places=1\ntrans post pre=(0) post=(1)\ntrans delta delta=(1)\n")
        assert [t.name for t in net.transitions] == ["post", "delta"]
        system = parse_model_source(
            "flcs alphabet={send,recv}\ntrans send send recv\ntrans recv recv send\n"
        )
        assert system.alphabet == ("send", "recv")
        assert [(t.name, t.op, t.letter) for t in system.transitions] == [
            ("send", ChannelOp.SEND, "recv"),
            ("recv", ChannelOp.RECV, "send"),
        ]

    @pytest.mark.parametrize(
        "text, line",
        [
            ("flcs alphabet={a,b}\ntrans r1 recv c\n", 2),
            ("petri places=2\ntrans t pre=(1) post=(0,1)\n", 2),
            ("petri places=1\ntrans t pre=(1) post=(1)\ntrans t pre=(0) post=(1)\n", 3),
            ("petri places=1\ntrans t pre=(-1) post=(1)\n", 2),
            ("flcs alphabet={a,a}\n", 1),
            ("petri places=0\n", 1),
            ("flcs alphabet={a}\ntrans t pre=(1) post=(0)\n", 2),
        ],
    )
    def test_semantic_errors(self, text, line):
        with pytest.raises(ModelSemanticError) as raised:
            parse_model(text)
        assert raised.value.code == "semantic"
        assert raised.value.line == line

    @pytest.mark.parametrize(
        "text",
        ["petri places=1\ntrans t pre=(1)\n", "queue size=3\n", "flcs alphabet={a}\ntrans s send\n"],
    )
    def test_syntax_errors(self, text):
        with pytest.raises(ModelSyntaxError) as raised:
            parse_model(text)
        assert raised.value.code == "syntax"
        assert raised.value.line >= 1
