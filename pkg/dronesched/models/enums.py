"""
Definition of application enums
"""

from enum import Enum, auto

from dronesched.core.enum import KebabStrEnum


class Strategy(KebabStrEnum):
    """
    Bin placement rule used for the second color component

    NEXT_FIT: one active bin per idNumber, closed as soon as an item does not fit
    FIRST_FIT: every open bin stays active, the lowest-numbered bin with room wins
    """

    NEXT_FIT = auto()
    FIRST_FIT = auto()


class EventKind(str, Enum):
    """
    What a scheduler update did at one time value
    """

    INSERTED = "inserted"
    DELETED = "deleted"
    COLORED = "colored"
    IDLE = "idle"


class Endpoint(str, Enum):
    """
    Side of an interval an endpoint belongs to
    """

    LEFT = "left"
    RIGHT = "right"


class Environment(str, Enum):
    """
    Defines the different environments that the application can be deployed in

    LOCAL: the local environment
    DEVELOPMENT: the development environment (dev branch deployment)
    STAGING: the staging environment
    PRODUCTION: the production environment
    """

    LOCAL = "local"
    DEVELOPMENT = "development"
    STAGING = "staging"
    PRODUCTION = "production"
