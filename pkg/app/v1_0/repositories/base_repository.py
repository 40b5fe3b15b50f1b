from threading import RLock
from typing import Callable, Dict, Generic, Hashable, Iterator, Optional, TypeVar

KeyT = TypeVar("KeyT", bound=Hashable)
ItemT = TypeVar("ItemT")


class BaseRepository(Generic[KeyT, ItemT]):
    """Insertion-ordered in-memory store.

    Writes happen while a problem is being loaded; solving only reads, so the
    lock only guards the loading phase of concurrent batch runs.
    """

    def __init__(self) -> None:
        self._items: Dict[KeyT, ItemT] = {}
        self._lock = RLock()

    def add(self, key: KeyT, item: ItemT) -> ItemT:
        with self._lock:
            if key in self._items:
                raise KeyError(key)
            self._items[key] = item
            return item

    def get_or_add(self, key: KeyT, make: Callable[[], ItemT]) -> ItemT:
        with self._lock:
            found = self._items.get(key)
            if found is None:
                found = make()
                self._items[key] = found
            return found

    def get(self, key: KeyT) -> Optional[ItemT]:
        return self._items.get(key)

    def has(self, key: KeyT) -> bool:
        return key in self._items

    def list_all(self) -> list[ItemT]:
        return list(self._items.values())

    def count(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[KeyT]:
        return iter(list(self._items))
