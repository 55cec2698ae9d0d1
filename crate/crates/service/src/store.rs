//! In-memory sessions with TTL eviction and optional per-session snapshots.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use infgon::{ClusterState, Edge, TriangulationDesc};
use serde::{Deserialize, Serialize};
use tokio::sync::RwLock;
use uuid::Uuid;

use crate::error::ApiError;

/// One explorer session. Undo and redo keep whole states, so restoring is
/// exact rather than replayed.
#[derive(Clone, Debug)]
pub struct Session {
    pub id: Uuid,
    pub initial: TriangulationDesc,
    pub current: ClusterState,
    undo: Vec<ClusterState>,
    redo: Vec<ClusterState>,
    pub created: Instant,
}

impl Session {
    pub fn new(desc: TriangulationDesc) -> Self {
        Session {
            id: Uuid::new_v4(),
            initial: desc.clone(),
            current: ClusterState::new(desc),
            undo: Vec::new(),
            redo: Vec::new(),
            created: Instant::now(),
        }
    }

    pub fn flip(&mut self, arc: Edge) -> infgon::Result<infgon::ExchangeRelation> {
        let (next, relation) = self.current.exchange_flip(arc)?;
        self.undo.push(std::mem::replace(&mut self.current, next));
        self.redo.clear();
        Ok(relation)
    }

    pub fn undo(&mut self) -> Result<(), ApiError> {
        let prev = self.undo.pop().ok_or(ApiError::EmptyUndoStack)?;
        self.redo.push(std::mem::replace(&mut self.current, prev));
        Ok(())
    }

    pub fn redo(&mut self) -> Result<(), ApiError> {
        let next = self.redo.pop().ok_or(ApiError::EmptyRedoStack)?;
        self.undo.push(std::mem::replace(&mut self.current, next));
        Ok(())
    }

    pub fn undo_depth(&self) -> usize {
        self.undo.len()
    }

    pub fn redo_depth(&self) -> usize {
        self.redo.len()
    }

    fn persisted(&self) -> Persisted {
        let done = self.current.history.len();
        let redo = self.redo.first().map(|s| s.history[done..].iter().map(|r| r.arc).collect()).unwrap_or_default();
        Persisted {
            id: self.id,
            initial: self.initial.clone(),
            flips: self.current.history.iter().map(|r| r.arc).collect(),
            redo,
        }
    }

    fn restore(p: Persisted) -> infgon::Result<Self> {
        let mut s = Session::new(p.initial);
        s.id = p.id;
        for arc in p.flips {
            s.flip(arc)?;
        }
        let mut ahead = s.clone();
        for arc in p.redo {
            ahead.flip(arc)?;
        }
        for _ in 0..ahead.undo_depth() - s.undo_depth() {
            ahead.undo().expect("replayed flips can be undone");
        }
        s.redo = ahead.redo;
        Ok(s)
    }
}

/// On-disk form: the initial descriptor, the flips applied, and the flips
/// that redo would apply next.
#[derive(Debug, Serialize, Deserialize)]
struct Persisted {
    id: Uuid,
    initial: TriangulationDesc,
    flips: Vec<Edge>,
    redo: Vec<Edge>,
}

struct Slot {
    session: Arc<RwLock<Session>>,
    last_access: Instant,
}

pub struct SessionStore {
    slots: Mutex<HashMap<Uuid, Slot>>,
    ttl: Duration,
    snapshot_dir: Option<PathBuf>,
}

impl SessionStore {
    pub fn new(ttl: Duration, snapshot_dir: Option<PathBuf>) -> Self {
        SessionStore { slots: Mutex::new(HashMap::new()), ttl, snapshot_dir }
    }

    pub fn insert(&self, session: Session) -> Arc<RwLock<Session>> {
        let id = session.id;
        let shared = Arc::new(RwLock::new(session));
        let slot = Slot { session: shared.clone(), last_access: Instant::now() };
        self.slots.lock().expect("store lock").insert(id, slot);
        shared
    }

    /// Looks a session up and refreshes its access time.
    pub fn get(&self, id: Uuid) -> Result<Arc<RwLock<Session>>, ApiError> {
        self.evict_expired(Instant::now());
        let mut slots = self.slots.lock().expect("store lock");
        let slot = slots.get_mut(&id).ok_or_else(|| ApiError::no_session(id))?;
        slot.last_access = Instant::now();
        Ok(slot.session.clone())
    }

    pub fn remove(&self, id: Uuid) -> bool {
        let removed = self.slots.lock().expect("store lock").remove(&id).is_some();
        if let Some(dir) = &self.snapshot_dir {
            let _ = std::fs::remove_file(dir.join(format!("{id}.json")));
        }
        removed
    }

    pub fn len(&self) -> usize {
        self.slots.lock().expect("store lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Drops sessions idle for longer than the TTL; returns how many.
    pub fn evict_expired(&self, now: Instant) -> usize {
        let expired: Vec<Uuid> = {
            let slots = self.slots.lock().expect("store lock");
            slots.iter().filter(|(_, s)| now.duration_since(s.last_access) > self.ttl).map(|(id, _)| *id).collect()
        };
        for id in &expired {
            self.remove(*id);
        }
        expired.len()
    }

    /// Writes the session to the snapshot directory, if one is configured.
    pub fn persist(&self, session: &Session) -> std::io::Result<()> {
        let Some(dir) = &self.snapshot_dir else { return Ok(()) };
        std::fs::create_dir_all(dir)?;
        let tmp = dir.join(format!("{}.json.tmp", session.id));
        std::fs::write(&tmp, serde_json::to_vec(&session.persisted())?)?;
        std::fs::rename(tmp, dir.join(format!("{}.json", session.id)))
    }

    /// Loads every snapshot in `dir`; returns how many sessions were restored.
    pub fn load_snapshots(&self, dir: &Path) -> std::io::Result<usize> {
        let mut n = 0;
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            if path.extension().and_then(|x| x.to_str()) != Some("json") {
                continue;
            }
            let p: Persisted = serde_json::from_slice(&std::fs::read(&path)?)?;
            let s = Session::restore(p).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
            self.insert(s);
            n += 1;
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(l: i64, r: i64) -> Edge {
        Edge::new(l, r).unwrap()
    }

    #[test]
    fn undo_redo_are_exact() {
        let mut s = Session::new(TriangulationDesc::fountain(0));
        let start = s.current.clone();
        s.flip(e(0, 2)).unwrap();
        let after = s.current.clone();
        s.undo().unwrap();
        assert_eq!(s.current, start);
        s.redo().unwrap();
        assert_eq!(s.current, after);
        assert!(matches!(s.redo(), Err(ApiError::EmptyRedoStack)));
        s.undo().unwrap();
        s.flip(e(0, 3)).unwrap();
        assert_eq!(s.redo_depth(), 0);
    }

    #[test]
    fn persisted_round_trip() {
        let mut s = Session::new(TriangulationDesc::fountain(0));
        for arc in [e(0, 2), e(0, 3), e(1, 3)] {
            s.flip(arc).unwrap();
        }
        s.undo().unwrap();
        s.undo().unwrap();
        let back = Session::restore(s.persisted()).unwrap();
        assert_eq!(back.current, s.current);
        assert_eq!(back.undo, s.undo);
        assert_eq!(back.redo, s.redo);
        assert_eq!(back.id, s.id);
    }

    #[test]
    fn ttl_eviction() {
        let store = SessionStore::new(Duration::from_secs(60), None);
        let id = store.insert(Session::new(TriangulationDesc::leapfrog(0))).try_read().unwrap().id;
        assert_eq!(store.evict_expired(Instant::now()), 0);
        assert_eq!(store.evict_expired(Instant::now() + Duration::from_secs(61)), 1);
        assert!(matches!(store.get(id), Err(ApiError::NoSession(_))));
    }
}
