"""One-step successors of downsets in the completed system"""

from typing import List

from src.engine.model import Model, lift_checked
from src.errors import TypeMismatchError
from src.order.downsets import DownSet, downset_from_ideals
from src.order.ideals import Ideal


def post_hat(model: Model, downset: DownSet) -> DownSet:
    """
    Successors of a downset: the union of every lifted transition applied to
    every part, undefined applications contributing nothing

    Args:
        model: Model providing the lifted transitions
        downset: Downset over the model's state type

    Returns:
        Canonical antichain of the successor ideals

    Raises:
        TypeMismatchError: If the downset is over another type
        ModelIntegrityError: If a lifted transition misbehaves
    """
    if downset.ty != model.state_type:
        raise TypeMismatchError("downset type differs from the model state type")
    images: List[Ideal] = []
    for index in range(len(model.transitions)):
        for part in downset.parts:
            image = lift_checked(model, index, part)
            if image is not None:
                images.append(image)
    return downset_from_ideals(model.state_type, images)
