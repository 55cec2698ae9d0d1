use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde::Serialize;
use uuid::Uuid;

#[derive(Debug, thiserror::Error)]
pub enum ApiError {
    #[error("no session {0}")]
    NoSession(String),

    #[error("nothing to undo")]
    EmptyUndoStack,

    #[error("nothing to redo")]
    EmptyRedoStack,

    /// A descriptor that is not a triangulation, at session creation.
    #[error("{0}")]
    InvalidDescriptor(infgon::Error),

    #[error("{0}")]
    BadRequest(String),

    #[error(transparent)]
    Engine(#[from] infgon::Error),
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arc: Option<infgon::Edge>,
}

impl ApiError {
    pub fn no_session(id: Uuid) -> Self {
        ApiError::NoSession(id.to_string())
    }

    pub fn status(&self) -> StatusCode {
        use infgon::Error as E;
        match self {
            ApiError::NoSession(_) => StatusCode::NOT_FOUND,
            ApiError::EmptyUndoStack | ApiError::EmptyRedoStack => StatusCode::CONFLICT,
            ApiError::InvalidDescriptor(_) | ApiError::BadRequest(_) => StatusCode::BAD_REQUEST,
            ApiError::Engine(e) => match e {
                E::EmptyWindow { .. } | E::WindowTooLarge { .. } | E::OutsideWindow(..) | E::BudgetExceeded(_) => {
                    StatusCode::UNPROCESSABLE_ENTITY
                }
                E::FrozenArc(_) | E::NotInTriangulation(_) | E::SideNotFlippable(_) | E::NoCover(_) => {
                    StatusCode::CONFLICT
                }
                E::RelationCheckFailed(_) | E::CertificateFailed(_) => StatusCode::INTERNAL_SERVER_ERROR,
                _ => StatusCode::BAD_REQUEST,
            },
        }
    }

    pub fn body(&self) -> ErrorBody {
        let (code, arc) = match self {
            ApiError::NoSession(_) => ("NoSession", None),
            ApiError::EmptyUndoStack => ("EmptyUndoStack", None),
            ApiError::EmptyRedoStack => ("EmptyRedoStack", None),
            ApiError::BadRequest(_) => ("BadRequest", None),
            ApiError::InvalidDescriptor(e) | ApiError::Engine(e) => (e.code(), e.arc()),
        };
        ErrorBody { code: code.to_string(), message: self.to_string(), arc }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status(), Json(self.body())).into_response()
    }
}
