from funnelq.pq.version import version_tag
from funnelq.pq.exception import (FunnelError, ConfigurationError, CapacityError,
                                  QueueEmptyError, ItemNotFoundError, KeyOrderError,
                                  NumericDomainError, HeapIndexError)
from funnelq.pq.item import Item
from funnelq.pq.funnel.facade import FunnelQueue
from funnelq.pq.oracle import OracleQueue
from funnelq.pq.instrumentation import OpCounters, NullCounters

__version__ = version_tag
